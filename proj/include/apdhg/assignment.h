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

// The assignment benchmark. The LP relaxation
//
//   max c^T x  s.t.  sum_j x_ij = 1, sum_i x_ij = 1, 0 <= x_ij <= 1
//
// is written as  min_{x in [0,1]^{n^2}} max_{y in R^{2n}}
//   -c^T x - y^T A x + e^T y,
// where x is the row-major flattening of the n x n matrix and A stacks the
// n row-sum constraints above the n column-sum constraints.

#ifndef APDHG_ASSIGNMENT_H_
#define APDHG_ASSIGNMENT_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <vector>

#include "apdhg/core.h"
#include "apdhg/random.h"
#include "apdhg/spectrum.h"

namespace apdhg {

struct AssignmentInstance {
  int n_jobs = 0;
  Vector cost;  // c_ij at index i * n + j
  std::uint64_t seed = 0;

  double Cost(int i, int j) const {
    return cost[static_cast<std::size_t>(i) * n_jobs + j];
  }
};

// c_ij = 10 * u_ij with u_ij drawn in row-major order from
// SplitMix64(seed) mapped to (0, 1], so every cost lies in (0, 10].
inline AssignmentInstance BuildInstance(int n_jobs, std::uint64_t seed) {
  if (n_jobs < 1) {
    throw SolverError(ErrorCode::kInvalidArgument, "n_jobs must be >= 1");
  }
  AssignmentInstance inst;
  inst.n_jobs = n_jobs;
  inst.seed = seed;
  inst.cost.resize(static_cast<std::size_t>(n_jobs) * n_jobs);
  SplitMix64 rng(seed);
  for (double& c : inst.cost) c = 10.0 * rng.NextOpenClosed();
  return inst;
}

// x_ij = 1/n, y = 0.
inline Iterate InitialIterate(int n_jobs) {
  const auto n = static_cast<std::size_t>(n_jobs);
  return {Vector(n * n, 1.0 / n_jobs), Vector(2 * n, 0.0)};
}

// A x = (row sums; column sums), (A^T y)_ij = y_i + y_{n+j}.
inline LinearCoupling AssignmentOperator(int n_jobs) {
  const auto n = static_cast<std::size_t>(n_jobs);
  auto apply = [n](std::span<const double> x) {
    Vector out(2 * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double v = x[i * n + j];
        row += v;
        out[n + j] += v;
      }
      out[i] = row;
    }
    return out;
  };
  auto adjoint = [n](std::span<const double> y) {
    Vector out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] = y[i] + y[n + j];
    }
    return out;
  };
  return LinearCoupling(n * n, 2 * n, apply, adjoint,
                        2.0 * static_cast<double>(n * n));
}

// rho(A^T A) = 2n, rho_avg(A^T A) = 2, rho_avg(A A^T) = n.
inline SpectrumInfo ExactSpectra(int n_jobs) {
  if (n_jobs < 1) {
    throw SolverError(ErrorCode::kInvalidArgument, "n_jobs must be >= 1");
  }
  const double n = n_jobs;
  return {.rho_ata = 2.0 * n,
          .rho_avg_ata = 2.0,
          .rho_avg_aat = n,
          .method = SpectrumMethod::kExactProvided};
}

inline SaddleProblem MakeSaddleProblem(const AssignmentInstance& instance) {
  const int n = instance.n_jobs;
  const LinearCoupling a = AssignmentOperator(n);
  auto c = std::make_shared<const Vector>(instance.cost);

  SaddleProblem p{.coupling = a};
  // x = P_[0,1](x0 + (c + A^T y) / r)
  p.primal_prox = [a, c](std::span<const double> x0,
                         std::span<const double> y, double r) {
    Vector x = a.ApplyAdjoint(y);
    for (std::size_t k = 0; k < x.size(); ++k) {
      x[k] = std::clamp(x0[k] + ((*c)[k] + x[k]) / r, 0.0, 1.0);
    }
    return x;
  };
  // y = y0 + (e - A x) / s
  p.dual_prox = [a](std::span<const double> y0, std::span<const double> x,
                    double s) {
    Vector y = a.Apply(x);
    for (std::size_t l = 0; l < y.size(); ++l) y[l] = y0[l] + (1.0 - y[l]) / s;
    return y;
  };
  p.theta1 = [c](std::span<const double> x) { return -Dot(*c, x); };
  p.theta2 = [](std::span<const double> y) {
    double sum = 0.0;
    for (double v : y) sum += v;
    return -sum;
  };
  p.primal_feasible = [](std::span<const double> x) {
    return std::all_of(x.begin(), x.end(),
                       [](double v) { return v >= 0.0 && v <= 1.0; });
  };
  p.objective = [c](std::span<const double> x) { return Dot(*c, x); };
  return p;
}

struct AssignmentOptimum {
  std::vector<int> column_of_row;
  double objective = 0.0;
};

// Exact maximum-profit assignment, O(n^3) shortest augmenting paths with
// potentials (minimizing -c). Ties go to the lowest column index.
inline AssignmentOptimum HungarianOptimum(const AssignmentInstance& instance) {
  const int n = instance.n_jobs;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  // 1-based: row_of_col[0] is the virtual row being inserted.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> row_of_col(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    row_of_col[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = row_of_col[j0];
      double delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = -instance.Cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[row_of_col[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of_col[j0] != 0);
    do {
      const int j1 = way[j0];
      row_of_col[j0] = row_of_col[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  AssignmentOptimum opt;
  opt.column_of_row.assign(n, -1);
  for (int j = 1; j <= n; ++j) opt.column_of_row[row_of_col[j] - 1] = j - 1;
  for (int i = 0; i < n; ++i) {
    opt.objective += instance.Cost(i, opt.column_of_row[i]);
  }
  return opt;
}

// 0/1 matrix of an assignment, row-major.
inline Vector PermutationMatrix(std::span<const int> column_of_row) {
  const std::size_t n = column_of_row.size();
  Vector x(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) x[i * n + column_of_row[i]] = 1.0;
  return x;
}

struct AssignmentSolution {
  Vector x;
  Vector y;
  double objective = 0.0;        // c^T x
  double binarity_gap = 0.0;     // max_ij min(x_ij, 1 - x_ij)
  double feasibility_gap = 0.0;  // ||A x - e||_inf
  // min_ij (u_i + u_{n+j} - c_ij) with u = -y, the multipliers of the
  // maximization LP in its usual sign convention. Nonnegative when u is
  // dual feasible.
  double dual_slack = 0.0;
};

inline AssignmentSolution AuditSolution(const AssignmentInstance& instance,
                                        std::span<const double> x,
                                        std::span<const double> y) {
  const auto n = static_cast<std::size_t>(instance.n_jobs);
  if (x.size() != n * n || y.size() != 2 * n) {
    throw SolverError(ErrorCode::kInvalidArgument,
                      "AuditSolution: dimension mismatch");
  }
  AssignmentSolution out;
  out.x.assign(x.begin(), x.end());
  out.y.assign(y.begin(), y.end());
  out.objective = Dot(instance.cost, x);
  for (double v : x) {
    out.binarity_gap = std::max(out.binarity_gap, std::min(v, 1.0 - v));
  }
  const Vector ax = AssignmentOperator(instance.n_jobs).Apply(x);
  for (double v : ax) {
    out.feasibility_gap = std::max(out.feasibility_gap, std::abs(v - 1.0));
  }
  out.dual_slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.dual_slack = std::min(out.dual_slack,
                                -y[i] - y[n + j] - instance.cost[i * n + j]);
    }
  }
  return out;
}

}  // namespace apdhg

#endif  // APDHG_ASSIGNMENT_H_
