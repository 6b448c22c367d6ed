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

// Problem model for
//
//   min_{x in X} max_{y in Y}  theta1(x) - y^T A x - theta2(y),
//
// with A given only through its action (a LinearCoupling) and the two
// proximal subproblems supplied in closed form by the problem author.

#ifndef APDHG_CORE_H_
#define APDHG_CORE_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "apdhg/errors.h"
#include "apdhg/vector_ops.h"

namespace apdhg {

// Stacked point w = (x; y).
struct Iterate {
  Vector x;
  Vector y;

  double SquaredNorm() const {
    return apdhg::SquaredNorm(x) + apdhg::SquaredNorm(y);
  }
  double Norm() const { return std::sqrt(SquaredNorm()); }
  bool AllFinite() const { return apdhg::AllFinite(x) && apdhg::AllFinite(y); }
  bool IsZero() const { return apdhg::IsZero(x) && apdhg::IsZero(y); }

  friend bool operator==(const Iterate&, const Iterate&) = default;
};

inline Iterate Subtract(const Iterate& a, const Iterate& b) {
  return {Subtract(a.x, b.x), Subtract(a.y, b.y)};
}

// Matrix-free A : R^n -> R^m together with its adjoint.
class LinearCoupling {
 public:
  using Map = std::function<Vector(std::span<const double>)>;

  LinearCoupling(std::size_t n_primal, std::size_t m_dual, Map apply,
                 Map apply_adjoint,
                 std::optional<double> trace_ata = std::nullopt)
      : n_primal_(n_primal),
        m_dual_(m_dual),
        apply_(std::move(apply)),
        apply_adjoint_(std::move(apply_adjoint)),
        trace_ata_(trace_ata) {}

  std::size_t n_primal() const { return n_primal_; }
  std::size_t m_dual() const { return m_dual_; }

  // Closed-form Trace(A^T A) when the problem knows it.
  std::optional<double> trace_ata() const { return trace_ata_; }

  Vector Apply(std::span<const double> x) const {
    if (x.size() != n_primal_) {
      throw SolverError(ErrorCode::kInvalidArgument,
                        "Apply: expected length " + std::to_string(n_primal_) +
                            ", got " + std::to_string(x.size()));
    }
    return apply_(x);
  }

  Vector ApplyAdjoint(std::span<const double> y) const {
    if (y.size() != m_dual_) {
      throw SolverError(ErrorCode::kInvalidArgument,
                        "ApplyAdjoint: expected length " +
                            std::to_string(m_dual_) + ", got " +
                            std::to_string(y.size()));
    }
    return apply_adjoint_(y);
  }

  // The coupling -A^T : R^m -> R^n.
  LinearCoupling NegatedAdjoint() const {
    Map apply = [a = apply_adjoint_](std::span<const double> v) {
      Vector out = a(v);
      for (double& e : out) e = -e;
      return out;
    };
    Map adjoint = [a = apply_](std::span<const double> v) {
      Vector out = a(v);
      for (double& e : out) e = -e;
      return out;
    };
    return LinearCoupling(m_dual_, n_primal_, std::move(apply),
                          std::move(adjoint), trace_ata_);
  }

 private:
  std::size_t n_primal_;
  std::size_t m_dual_;
  Map apply_;
  Map apply_adjoint_;
  std::optional<double> trace_ata_;
};

// Dense row-major m x n matrix wrapped as a coupling.
inline LinearCoupling DenseCoupling(std::size_t m, std::size_t n,
                                    Vector row_major) {
  if (row_major.size() != m * n) {
    throw SolverError(ErrorCode::kInvalidArgument,
                      "DenseCoupling: entry count does not match m*n");
  }
  auto a = std::make_shared<const Vector>(std::move(row_major));
  auto apply = [a, m, n](std::span<const double> x) {
    Vector out(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      double sum = 0.0;
      for (std::size_t j = 0; j < n; ++j) sum += (*a)[i * n + j] * x[j];
      out[i] = sum;
    }
    return out;
  };
  auto adjoint = [a, m, n](std::span<const double> y) {
    Vector out(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) out[j] += (*a)[i * n + j] * y[i];
    }
    return out;
  };
  return LinearCoupling(n, m, apply, adjoint);
}

inline LinearCoupling ZeroCoupling(std::size_t m, std::size_t n) {
  return LinearCoupling(
      n, m, [m](std::span<const double>) { return Vector(m, 0.0); },
      [n](std::span<const double>) { return Vector(n, 0.0); }, 0.0);
}

inline LinearCoupling IdentityCoupling(std::size_t k) {
  auto copy = [](std::span<const double> v) {
    return Vector(v.begin(), v.end());
  };
  return LinearCoupling(k, k, copy, copy, static_cast<double>(k));
}

struct SaddleProblem {
  // (anchor x0, dual point y, r) ->
  //   argmin { theta1(x) - y^T A x + (r/2)||x - x0||^2 : x in X }.
  using PrimalProx = std::function<Vector(
      std::span<const double>, std::span<const double>, double)>;
  // (anchor y0, primal point x, s) ->
  //   argmax { -theta2(y) - y^T A x - (s/2)||y - y0||^2 : y in Y }.
  using DualProx = std::function<Vector(std::span<const double>,
                                        std::span<const double>, double)>;
  using Evaluator = std::function<double(std::span<const double>)>;
  using Membership = std::function<bool(std::span<const double>)>;

  LinearCoupling coupling;
  PrimalProx primal_prox = {};
  DualProx dual_prox = {};
  // Optional; empty functions mean "not available".
  Evaluator theta1 = {};
  Evaluator theta2 = {};
  Membership primal_feasible = {};
  Membership dual_feasible = {};
  // Reported objective value of a primal point (for the assignment
  // benchmark this is c^T x). Optional.
  Evaluator objective = {};

  std::size_t n() const { return coupling.n_primal(); }
  std::size_t m() const { return coupling.m_dual(); }

  void CheckDimensions(const Iterate& w, std::string_view where) const {
    if (w.x.size() != n() || w.y.size() != m()) {
      throw SolverError(
          ErrorCode::kInvalidArgument,
          std::string(where) + ": iterate has dimensions (" +
              std::to_string(w.x.size()) + ", " + std::to_string(w.y.size()) +
              "), problem has (" + std::to_string(n()) + ", " +
              std::to_string(m()) + ")");
    }
  }

  bool IsFeasible(const Iterate& w) const {
    return (!primal_feasible || primal_feasible(w.x)) &&
           (!dual_feasible || dual_feasible(w.y));
  }
};

// F(w) = (-A^T y; A x).
inline Iterate ApplyF(const SaddleProblem& problem, const Iterate& w) {
  problem.CheckDimensions(w, "ApplyF");
  Vector fx = problem.coupling.ApplyAdjoint(w.y);
  for (double& v : fx) v = -v;
  return {std::move(fx), problem.coupling.Apply(w.x)};
}

// Sampled violation of the variational inequality
//   theta(z) - theta(w) + (z - w)^T F(w) >= 0   for all z in Omega,
// i.e. max over `samples` of max(0, -[...]). Zero at a saddle point.
inline double ViResidual(const SaddleProblem& problem, const Iterate& w,
                         std::span<const Iterate> samples) {
  if (!problem.theta1 || !problem.theta2) {
    throw SolverError(ErrorCode::kUnsupportedOperation,
                      "ViResidual needs theta1 and theta2 evaluators");
  }
  const Iterate fw = ApplyF(problem, w);
  const double theta_w = problem.theta1(w.x) + problem.theta2(w.y);
  double worst = 0.0;
  for (const Iterate& z : samples) {
    problem.CheckDimensions(z, "ViResidual");
    const Iterate dz = Subtract(z, w);
    const double gap = problem.theta1(z.x) + problem.theta2(z.y) - theta_w +
                       Dot(dz.x, fw.x) + Dot(dz.y, fw.y);
    worst = std::max(worst, -gap);
  }
  return worst;
}

// The role-swapped twin: primal and dual exchange places, the coupling
// becomes -A^T and theta1/theta2 swap. A saddle point (x*, y*) of the
// original corresponds to the saddle point (y*, x*) of the twin.
inline SaddleProblem RoleSwapped(const SaddleProblem& p) {
  SaddleProblem twin{.coupling = p.coupling.NegatedAdjoint()};
  twin.primal_prox = [dual = p.dual_prox](std::span<const double> anchor,
                                          std::span<const double> point,
                                          double r) {
    return dual(anchor, point, r);
  };
  twin.dual_prox = [primal = p.primal_prox](std::span<const double> anchor,
                                            std::span<const double> point,
                                            double s) {
    return primal(anchor, point, s);
  };
  twin.theta1 = p.theta2;
  twin.theta2 = p.theta1;
  twin.primal_feasible = p.dual_feasible;
  twin.dual_feasible = p.primal_feasible;
  return twin;
}

inline Iterate Swapped(const Iterate& w) { return {w.y, w.x}; }

}  // namespace apdhg

#endif  // APDHG_CORE_H_
