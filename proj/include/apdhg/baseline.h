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

// Fixed-step baselines: the plain primal-dual hybrid gradient iteration
// (primal prox, then dual prox at the new primal point) and the
// Chambolle-Pock variant, which evaluates the dual prox at the extrapolated
// point 2 x^{k+1} - x^k.

#ifndef APDHG_BASELINE_H_
#define APDHG_BASELINE_H_

#include <cmath>
#include <sstream>
#include <utility>

#include "apdhg/core.h"
#include "apdhg/run_trace.h"

namespace apdhg {

struct FixedStepConfig {
  double r = 1.0;  // primal regularization
  double s = 1.0;  // dual regularization
  int max_iters = 200000;
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  // Chambolle-Pock only: reject r*s <= rho(A^T A).
  bool enforce_cp_condition = true;
  bool store_iterates = false;

  void Validate() const {
    if (!(r > 0.0) || !(s > 0.0) || !std::isfinite(r) || !std::isfinite(s)) {
      throw SolverError(ErrorCode::kInvalidConfiguration,
                        "r and s must be positive and finite");
    }
    if (!(rel_tol > 0.0)) {
      throw SolverError(ErrorCode::kInvalidConfiguration,
                        "rel_tol must be positive");
    }
    if (max_iters < 1 || abs_tol < 0.0) {
      throw SolverError(ErrorCode::kInvalidConfiguration,
                        "max_iters must be >= 1 and abs_tol >= 0");
    }
  }
};

// r = 10/n, s = 0.4 n (so r s = 4), run with the fixed-step iteration.
inline FixedStepConfig HeuristicPdaPreset(int n_jobs) {
  if (n_jobs < 1) {
    throw SolverError(ErrorCode::kInvalidArgument, "n_jobs must be >= 1");
  }
  const double n = n_jobs;
  FixedStepConfig cfg;
  cfg.r = 10.0 / n;
  cfg.s = 0.4 * n;
  cfg.enforce_cp_condition = false;
  return cfg;
}

// r = (10/n) sqrt(n/2), s = 0.4 n sqrt(n/2). The product equals
// rho(A^T A) = 2n for the assignment operator, which is the boundary of the
// strict condition, so the preset does not enforce it.
inline FixedStepConfig ChambollePockPreset(int n_jobs) {
  if (n_jobs < 1) {
    throw SolverError(ErrorCode::kInvalidArgument, "n_jobs must be >= 1");
  }
  const double n = n_jobs;
  const double scale = std::sqrt(n / 2.0);
  FixedStepConfig cfg;
  cfg.r = 10.0 / n * scale;
  cfg.s = 0.4 * n * scale;
  cfg.enforce_cp_condition = false;
  return cfg;
}

namespace internal {

template <typename Step>
SolveResult RunFixedStep(const SaddleProblem& problem, const Iterate& w0,
                         const FixedStepConfig& cfg, Step step) {
  problem.CheckDimensions(w0, "fixed-step solver");
  SolveResult result;
  RunTrace& trace = result.trace;
  trace.parameters = {{"r", cfg.r}, {"s", cfg.s}};
  trace.initial_norm = w0.Norm();
  trace.max_iterate_norm = trace.initial_norm;
  if (cfg.store_iterates) trace.iterates.push_back(w0);

  Iterate w = w0;
  for (int k = 1; k <= cfg.max_iters; ++k) {
    Iterate next = step(w);
    if (!next.AllFinite()) {
      throw SolverError(ErrorCode::kNumericalBlowup,
                        "non-finite iterate at iteration " + std::to_string(k),
                        k);
    }
    IterationRecord rec;
    rec.iter_index = k;
    rec.reg_param = cfg.r;
    rec.stop_residual = StopResidual(next, w);
    rec.iterate_norm = next.Norm();
    if (problem.objective) rec.objective = problem.objective(next.x);
    trace.max_iterate_norm = std::max(trace.max_iterate_norm, rec.iterate_norm);
    const bool stop =
        StopSatisfied(next, w, rec.stop_residual, cfg.rel_tol, cfg.abs_tol);
    trace.records.push_back(rec);
    if (cfg.store_iterates) trace.iterates.push_back(next);
    w = std::move(next);
    if (stop) {
      trace.converged = true;
      trace.reason = TerminationReason::kConverged;
      break;
    }
  }
  result.solution = std::move(w);
  return result;
}

}  // namespace internal

// x^{k+1} = primal_prox(x^k, y^k, r); y^{k+1} = dual_prox(y^k, x^{k+1}, s).
// No convergence guarantee for general problems; a run that does not
// converge ends with reason kMaxIterations and its norm growth recorded.
inline SolveResult SolvePdhgFixed(const SaddleProblem& problem,
                                  const Iterate& w0,
                                  const FixedStepConfig& cfg) {
  cfg.Validate();
  return internal::RunFixedStep(problem, w0, cfg, [&](const Iterate& w) {
    Iterate next;
    next.x = problem.primal_prox(w.x, w.y, cfg.r);
    next.y = problem.dual_prox(w.y, next.x, cfg.s);
    return next;
  });
}

inline SolveResult SolveChambollePock(const SaddleProblem& problem,
                                      const Iterate& w0,
                                      const FixedStepConfig& cfg,
                                      double rho_ata) {
  cfg.Validate();
  if (cfg.enforce_cp_condition && !(cfg.r * cfg.s > rho_ata)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "Chambolle-Pock requires r*s > rho(A^T A); got r*s = "
        << cfg.r * cfg.s << ", rho(A^T A) = " << rho_ata;
    throw SolverError(ErrorCode::kInvalidConfiguration, msg.str());
  }
  SolveResult result =
      internal::RunFixedStep(problem, w0, cfg, [&](const Iterate& w) {
        Iterate next;
        next.x = problem.primal_prox(w.x, w.y, cfg.r);
        Vector x_bar(next.x.size());
        for (std::size_t i = 0; i < x_bar.size(); ++i) {
          x_bar[i] = 2.0 * next.x[i] - w.x[i];
        }
        next.y = problem.dual_prox(w.y, x_bar, cfg.s);
        return next;
      });
  result.trace.parameters["rho_ata"] = rho_ata;
  return result;
}

}  // namespace apdhg

#endif  // APDHG_BASELINE_H_
