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

#ifndef APDHG_RUN_TRACE_H_
#define APDHG_RUN_TRACE_H_

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apdhg/core.h"

namespace apdhg {

// Telemetry for one outer iteration. Fields that only exist for the
// adaptive solvers are left empty by the fixed-step baselines.
struct IterationRecord {
  int iter_index = 0;  // 1-based
  // r (or r_k) for primal-varying schemes, s_k for the adaptive PDHG.
  double reg_param = 0.0;
  std::optional<double> tuning_ratio;
  int inner_resolves = 0;
  std::optional<double> alpha_star;
  // dw^T Q dw and (1/2)(r||dx||^2 + s||dy||^2) for the accepted prediction.
  std::optional<double> key_inequality_lhs;
  std::optional<double> key_inequality_rhs;
  // (1/s)||A dx||^2 and nu r_k ||dx||^2 (DPHG); mirrored for the PDHG.
  std::optional<double> tuning_lhs;
  std::optional<double> tuning_rhs;
  // ||w^k - w~^k||^2 in the lower average-norm matrix.
  std::optional<double> lower_h_norm_sq;
  double stop_residual = 0.0;  // ||w^{k+1} - w^k|| / ||w^{k+1}||
  double iterate_norm = 0.0;   // ||w^{k+1}||
  std::optional<double> objective;
};

enum class TerminationReason {
  kConverged,
  kSolutionWitness,  // prediction reproduced the iterate exactly
  kMaxIterations,
};

inline std::string_view TerminationReasonName(TerminationReason reason) {
  switch (reason) {
    case TerminationReason::kConverged:
      return "converged";
    case TerminationReason::kSolutionWitness:
      return "solution-witness";
    case TerminationReason::kMaxIterations:
      return "max-iterations";
  }
  return "unknown";
}

struct RunTrace {
  std::vector<IterationRecord> records;
  // w^0, w^1, ... when the solver was asked to keep them.
  std::vector<Iterate> iterates;
  TerminationReason reason = TerminationReason::kMaxIterations;
  bool converged = false;
  double initial_norm = 0.0;
  double max_iterate_norm = 0.0;
  // Scalar settings that defined the run (r, s, r_a, bounds, ...).
  std::map<std::string, double> parameters;

  int iterations() const { return static_cast<int>(records.size()); }

  int total_inner_resolves() const {
    int total = 0;
    for (const auto& r : records) total += r.inner_resolves;
    return total;
  }

  std::optional<double> min_alpha_star() const {
    std::optional<double> best;
    for (const auto& r : records) {
      if (r.alpha_star) best = best ? std::min(*best, *r.alpha_star) : *r.alpha_star;
    }
    return best;
  }

  // max_k ||w^k|| / ||w^0||; growth above 1 on a non-converging run is the
  // divergence diagnostic.
  double norm_growth() const {
    if (initial_norm == 0.0) {
      return max_iterate_norm == 0.0
                 ? 1.0
                 : std::numeric_limits<double>::infinity();
    }
    return max_iterate_norm / initial_norm;
  }
};

struct SolveResult {
  Iterate solution;
  RunTrace trace;
};

// ||next - prev|| / ||next||, with 0/0 read as 0.
inline double StopResidual(const Iterate& next, const Iterate& prev) {
  const double diff = Subtract(next, prev).Norm();
  if (diff == 0.0) return 0.0;
  const double denom = next.Norm();
  if (denom == 0.0) return std::numeric_limits<double>::infinity();
  return diff / denom;
}

// Shared stopping test: the relative rule, optionally backed by an absolute
// floor on ||w^{k+1} - w^k|| (abs_tol = 0 disables the floor).
inline bool StopSatisfied(const Iterate& next, const Iterate& prev,
                          double residual, double rel_tol, double abs_tol) {
  if (residual < rel_tol) return true;
  return abs_tol > 0.0 && Subtract(next, prev).Norm() < abs_tol;
}

}  // namespace apdhg

#endif  // APDHG_RUN_TRACE_H_
