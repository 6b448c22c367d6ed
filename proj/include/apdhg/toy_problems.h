// Copyright 2026 The apdhg Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Small saddle problems with linear objectives over boxes:
//   theta1(x) = c1^T x on X = [lo1, hi1],  theta2(y) = c2^T y on Y = [lo2, hi2].
// Bounds may be infinite. Both prox maps are a shifted box projection.

#ifndef APDHG_TOY_PROBLEMS_H_
#define APDHG_TOY_PROBLEMS_H_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <utility>

#include "apdhg/core.h"
#include "apdhg/random.h"

namespace apdhg {

struct Box {
  Vector lower;
  Vector upper;

  static Box Unbounded(std::size_t dim) {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    return {Vector(dim, -kInf), Vector(dim, kInf)};
  }
  static Box Uniform(std::size_t dim, double lo, double hi) {
    return {Vector(dim, lo), Vector(dim, hi)};
  }

  bool Contains(std::span<const double> v) const {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < lower[i] || v[i] > upper[i]) return false;
    }
    return true;
  }
  double Clamp(std::size_t i, double v) const {
    return std::clamp(v, lower[i], upper[i]);
  }
};

inline SaddleProblem BoxLinearProblem(LinearCoupling coupling, Vector c1,
                                      Box x_box, Vector c2, Box y_box) {
  const std::size_t n = coupling.n_primal();
  const std::size_t m = coupling.m_dual();
  if (c1.size() != n || c2.size() != m || x_box.lower.size() != n ||
      x_box.upper.size() != n || y_box.lower.size() != m ||
      y_box.upper.size() != m) {
    throw SolverError(ErrorCode::kInvalidArgument,
                      "BoxLinearProblem: dimension mismatch");
  }
  auto c1p = std::make_shared<const Vector>(std::move(c1));
  auto c2p = std::make_shared<const Vector>(std::move(c2));
  auto xb = std::make_shared<const Box>(std::move(x_box));
  auto yb = std::make_shared<const Box>(std::move(y_box));

  SaddleProblem p{.coupling = coupling};
  // x = P_X(x0 + (A^T y - c1) / r)
  p.primal_prox = [coupling, c1p, xb](std::span<const double> x0,
                                      std::span<const double> y, double r) {
    Vector x = coupling.ApplyAdjoint(y);
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] = xb->Clamp(i, x0[i] + (x[i] - (*c1p)[i]) / r);
    }
    return x;
  };
  // y = P_Y(y0 - (A x + c2) / s)
  p.dual_prox = [coupling, c2p, yb](std::span<const double> y0,
                                    std::span<const double> x, double s) {
    Vector y = coupling.Apply(x);
    for (std::size_t i = 0; i < y.size(); ++i) {
      y[i] = yb->Clamp(i, y0[i] - (y[i] + (*c2p)[i]) / s);
    }
    return y;
  };
  p.theta1 = [c1p](std::span<const double> x) { return Dot(*c1p, x); };
  p.theta2 = [c2p](std::span<const double> y) { return Dot(*c2p, y); };
  p.primal_feasible = [xb](std::span<const double> x) {
    return xb->Contains(x);
  };
  p.dual_feasible = [yb](std::span<const double> y) {
    return yb->Contains(y);
  };
  p.objective = [c1p](std::span<const double> x) {
    return Dot(*c1p, x);
  };
  return p;
}

// theta1 = theta2 = 0, A = 0.
inline SaddleProblem ZeroProblem(std::size_t n, std::size_t m) {
  return BoxLinearProblem(ZeroCoupling(m, n), Vector(n, 0.0),
                          Box::Unbounded(n), Vector(m, 0.0),
                          Box::Unbounded(m));
}

// min_x max_y -y x over R x R: the pure rotation. Unique saddle point 0.
inline SaddleProblem RotationToy() {
  return BoxLinearProblem(IdentityCoupling(1), {0.0}, Box::Unbounded(1), {0.0},
                          Box::Unbounded(1));
}

// Dense m x n coupling with entries uniform on [-1, 1) from `seed`.
inline Vector RandomDenseMatrix(std::size_t m, std::size_t n,
                                std::uint64_t seed) {
  SplitMix64 rng(seed);
  Vector a(m * n);
  for (double& v : a) v = rng.NextUniform(-1.0, 1.0);
  return a;
}

// Random dense bilinear problem with linear costs on the boxes
// X = [0, 1]^n, Y = [-1, 1]^m. Compact domains, so a saddle point exists.
inline SaddleProblem RandomBoxProblem(std::size_t m, std::size_t n,
                                      std::uint64_t seed) {
  SplitMix64 rng(seed ^ 0x5DEECE66DULL);
  Vector c1(n);
  Vector c2(m);
  for (double& v : c1) v = rng.NextUniform(-1.0, 1.0);
  for (double& v : c2) v = rng.NextUniform(-1.0, 1.0);
  return BoxLinearProblem(DenseCoupling(m, n, RandomDenseMatrix(m, n, seed)),
                          std::move(c1), Box::Uniform(n, 0.0, 1.0),
                          std::move(c2), Box::Uniform(m, -1.0, 1.0));
}

}  // namespace apdhg

#endif  // APDHG_TOY_PROBLEMS_H_
