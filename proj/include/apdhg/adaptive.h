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

// Adaptive prediction-correction primal-dual solvers.
//
// Adaptive DPHG: the prediction solves the dual subproblem first with a
// fixed s, then the primal subproblem with a varying r_k. r_k is raised
// until
//
//   (1/s) ||A dx||^2 <= nu r_k ||dx||^2,          dx = x^k - x~^k,
//
// and the predictor is corrected along M dw, dw = w^k - w~^k, with
//
//   Q = [ r_k I    0  ]   H = [ r_a I  0  ]   M = [ (r_k/r_a) I   0 ]
//       [  -A     s I ]       [  0    s I ]       [   -(1/s) A    I ]
//
// so that Q = H M, and step alpha* = dw^T Q dw / ||M dw||_H^2.
//
// Adaptive PDHG is the mirror image: primal first with a fixed r, dual
// second with a varying s_k, and
//
//   Q = [ r I   A^T  ]   H = [ r I   0   ]   M = [ I   (1/r) A^T   ]
//       [  0   s_k I ]       [  0  s_a I ]       [ 0  (s_k/s_a) I  ].
//
// All quantities are evaluated matrix-free. Each outer iteration applies
// the coupling inside the two prox maps plus one A dx (resp. A^T dy) per
// tuning step; that product is reused by the step size and the correction.

#ifndef APDHG_ADAPTIVE_H_
#define APDHG_ADAPTIVE_H_

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "apdhg/core.h"
#include "apdhg/run_trace.h"
#include "apdhg/spectrum.h"

namespace apdhg {

struct AdaptiveConfig {
  double tau = 1.0;    // balanced factor of the fixed parameter, [1/5, 5]
  double kappa = 5.0;  // balanced factor of r_a (or s_a), [1/10, 10]
  double gamma = 1.0;  // relaxation, (0, 2)
  double theta = 1.2;  // increase rate, theta * nu > 1
  double mu = 0.5;     // decrease trigger, (0, 1)
  double nu = 0.9;     // closeness factor, (mu, 1)
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  int max_iters = 200000;
  int max_inner = 60;
  bool store_iterates = false;

  void Validate() const {
    auto fail = [](const std::string& what) {
      throw SolverError(ErrorCode::kInvalidConfiguration, what);
    };
    if (!(tau >= 0.2 && tau <= 5.0)) fail("tau must lie in [1/5, 5]");
    if (!(kappa >= 0.1 && kappa <= 10.0)) fail("kappa must lie in [1/10, 10]");
    if (!(gamma > 0.0 && gamma < 2.0)) fail("gamma must lie in (0, 2)");
    if (!(mu > 0.0 && mu < 1.0)) fail("mu must lie in (0, 1)");
    if (!(nu > 0.0 && nu < 1.0)) fail("nu must lie in (0, 1)");
    if (!(nu > mu)) fail("nu must exceed mu");
    if (!(theta * nu > 1.0)) fail("theta * nu must exceed 1");
    if (!(rel_tol > 0.0) || abs_tol < 0.0) fail("tolerances must be positive");
    if (max_iters < 1 || max_inner < 0) fail("iteration caps must be positive");
  }
};

// Parameters of the adaptive DPHG. r_k varies, s is fixed.
struct DphgState {
  double r_k = 0.0;
  double s = 0.0;
  double r_a = 0.0;
  double r_lower = 0.0;
  double r_upper = 0.0;  // theoretical cap, logged only
};

// Parameters of the adaptive PDHG. s_k varies, r is fixed.
struct PdhgState {
  double s_k = 0.0;
  double r = 0.0;
  double s_a = 0.0;
  double s_lower = 0.0;
  double s_upper = 0.0;
};

namespace internal {

// A zero coupling has no spectrum to scale by; use unit surrogates so the
// parameters stay finite (the run then stops on its first prediction).
inline void SurrogateSpectrum(double& rho, double& avg_fixed,
                              double& avg_varying) {
  if (rho > 0.0 && avg_fixed > 0.0 && avg_varying > 0.0) return;
  rho = 1.0;
  avg_fixed = 1.0;
  avg_varying = 1.0;
}

}  // namespace internal

// s = tau rho_avg(AA^T), r_0 = (3/2s) rho_avg(A^T A), r_a = kappa
// rho_avg(A^T A)/s, r_lower = sqrt(rho_avg(A^T A)/rho(A^T A)) r_a,
// r_upper = max{(2/s) theta rho, rho/(nu s)}. r_0 is lifted to r_lower
// when the formula would start below the lower bound.
inline DphgState InitialDphgState(const SpectrumInfo& spectrum,
                                  const AdaptiveConfig& cfg) {
  double rho = spectrum.rho_ata;
  double avg_ata = spectrum.rho_avg_ata;
  double avg_aat = spectrum.rho_avg_aat;
  internal::SurrogateSpectrum(rho, avg_aat, avg_ata);
  DphgState st;
  st.s = cfg.tau * avg_aat;
  st.r_a = cfg.kappa * avg_ata / st.s;
  st.r_lower = std::sqrt(avg_ata / rho) * st.r_a;
  st.r_upper = std::max(2.0 / st.s * cfg.theta * rho, rho / (cfg.nu * st.s));
  st.r_k = std::max(1.5 / st.s * avg_ata, st.r_lower);
  return st;
}

inline PdhgState InitialPdhgState(const SpectrumInfo& spectrum,
                                  const AdaptiveConfig& cfg) {
  double rho = spectrum.rho_ata;
  double avg_ata = spectrum.rho_avg_ata;
  double avg_aat = spectrum.rho_avg_aat;
  internal::SurrogateSpectrum(rho, avg_ata, avg_aat);
  PdhgState st;
  st.r = cfg.tau * avg_ata;
  st.s_a = cfg.kappa * avg_aat / st.r;
  st.s_lower = std::sqrt(avg_aat / rho) * st.s_a;
  st.s_upper = std::max(2.0 / st.r * cfg.theta * rho, rho / (cfg.nu * st.r));
  st.s_k = std::max(1.5 / st.r * avg_aat, st.s_lower);
  return st;
}

// ---------------------------------------------------------------------------
// Adaptive DPHG kernels.

// Dual prox at x^k first, then primal prox at the new dual point.
inline Iterate PredictDphg(const SaddleProblem& problem, const Iterate& w,
                           double r_k, double s) {
  Iterate pred;
  pred.y = problem.dual_prox(w.y, w.x, s);
  pred.x = problem.primal_prox(w.x, pred.y, r_k);
  return pred;
}

// t = ((1/s) ||A dx||^2) / (r_k ||dx||^2) given a_dx = A dx; t = 0 if dx = 0.
inline double TuningRatio(double sq_a_d, double sq_d, double varying,
                          double fixed) {
  if (sq_d == 0.0) return 0.0;
  return (sq_a_d / fixed) / (varying * sq_d);
}

inline double TuningRatioDphg(const LinearCoupling& coupling,
                              std::span<const double> x,
                              std::span<const double> x_tilde, double r_k,
                              double s) {
  const Vector dx = Subtract(x, x_tilde);
  return TuningRatio(SquaredNorm(coupling.Apply(dx)), SquaredNorm(dx), r_k, s);
}

// The accepted prediction of one outer iteration with its cached products.
struct DphgPrediction {
  Iterate w_tilde;
  Iterate dw;    // w^k - w~^k
  Vector a_dx;   // A dx
  double t = 0.0;
};

struct DphgAdaptResult {
  DphgPrediction prediction;
  DphgState state;
  int inner_resolves = 0;
};

// Predict, then raise r_k by t*theta and re-solve the primal subproblem
// until t <= nu. The dual predictor does not depend on r_k and is kept.
inline DphgAdaptResult AdaptR(const SaddleProblem& problem, const Iterate& w,
                              const DphgState& state,
                              const AdaptiveConfig& cfg) {
  DphgAdaptResult out;
  out.state = state;
  DphgPrediction& p = out.prediction;
  p.w_tilde = PredictDphg(problem, w, state.r_k, state.s);
  p.dw.y = Subtract(w.y, p.w_tilde.y);
  auto measure = [&] {
    p.dw.x = Subtract(w.x, p.w_tilde.x);
    p.a_dx = problem.coupling.Apply(p.dw.x);
    p.t = TuningRatio(SquaredNorm(p.a_dx), SquaredNorm(p.dw.x), out.state.r_k,
                      out.state.s);
  };
  measure();
  while (p.t > cfg.nu) {
    if (out.inner_resolves >= cfg.max_inner) {
      throw SolverError(ErrorCode::kTuningStall,
                        "r_k tuning exceeded " + std::to_string(cfg.max_inner) +
                            " re-solves (t = " + std::to_string(p.t) + ")");
    }
    out.state.r_k *= p.t * cfg.theta;
    p.w_tilde.x = problem.primal_prox(w.x, p.w_tilde.y, out.state.r_k);
    ++out.inner_resolves;
    measure();
  }
  return out;
}

// dw^T Q dw = r_k ||dx||^2 - dy^T A dx + s ||dy||^2.
inline double QuadraticFormDphg(std::span<const double> a_dx, const Iterate& dw,
                                double r_k, double s) {
  return r_k * SquaredNorm(dw.x) - Dot(dw.y, a_dx) + s * SquaredNorm(dw.y);
}

inline double QuadraticFormDphg(const LinearCoupling& coupling,
                                const Iterate& dw, double r_k, double s) {
  return QuadraticFormDphg(coupling.Apply(dw.x), dw, r_k, s);
}

// ||M dw||_H^2 = (r_k^2/r_a) ||dx||^2 + s ||dy - (1/s) A dx||^2.
inline double CorrectionNormDphg(std::span<const double> a_dx,
                                 const Iterate& dw, double r_k, double r_a,
                                 double s) {
  double sq = 0.0;
  for (std::size_t i = 0; i < dw.y.size(); ++i) {
    const double e = dw.y[i] - a_dx[i] / s;
    sq += e * e;
  }
  return r_k * r_k / r_a * SquaredNorm(dw.x) + s * sq;
}

inline double CorrectionNormDphg(const LinearCoupling& coupling,
                                 const Iterate& dw, double r_k, double r_a,
                                 double s) {
  return CorrectionNormDphg(coupling.Apply(dw.x), dw, r_k, r_a, s);
}

// alpha* = q / ||M dw||_H^2. A zero denominator is only legitimate for
// dw = 0, in which case q is zero as well and the step is 0.
inline double StepSizeAlpha(double q_form, double m_norm) {
  if (m_norm > 0.0) return q_form / m_norm;
  if (q_form == 0.0) return 0.0;
  throw SolverError(ErrorCode::kInternalInconsistency,
                    "zero correction norm with nonzero quadratic form");
}

// x^{k+1} = x^k - g (r_k/r_a) dx,  y^{k+1} = y^k - g (dy - (1/s) A dx),
// with g = gamma * alpha*.
inline Iterate CorrectDphg(const Iterate& w, std::span<const double> a_dx,
                           const Iterate& dw, double step, double r_k,
                           double r_a, double s) {
  Iterate next = w;
  const double gx = step * (r_k / r_a);
  for (std::size_t i = 0; i < next.x.size(); ++i) next.x[i] -= gx * dw.x[i];
  for (std::size_t i = 0; i < next.y.size(); ++i) {
    next.y[i] -= step * (dw.y[i] - a_dx[i] / s);
  }
  return next;
}

inline Iterate CorrectDphg(const Iterate& w, const Iterate& w_tilde,
                           double alpha_star, double gamma, double r_k,
                           double r_a, double s,
                           const LinearCoupling& coupling) {
  const Iterate dw = Subtract(w, w_tilde);
  return CorrectDphg(w, coupling.Apply(dw.x), dw, gamma * alpha_star, r_k, r_a,
                     s);
}

// r_{k+1} = max{(2/3) r_k, r_lower} when t <= mu and r_k > r_lower.
inline DphgState DecreaseR(const DphgState& state, double t,
                           const AdaptiveConfig& cfg) {
  DphgState next = state;
  if (t <= cfg.mu && state.r_k > state.r_lower) {
    next.r_k = std::max(state.r_k * (2.0 / 3.0), state.r_lower);
  }
  return next;
}

// ---------------------------------------------------------------------------
// Adaptive PDHG kernels (mirror).

inline Iterate PredictPdhg(const SaddleProblem& problem, const Iterate& w,
                           double r, double s_k) {
  Iterate pred;
  pred.x = problem.primal_prox(w.x, w.y, r);
  pred.y = problem.dual_prox(w.y, pred.x, s_k);
  return pred;
}

inline double TuningRatioPdhg(const LinearCoupling& coupling,
                              std::span<const double> y,
                              std::span<const double> y_tilde, double r,
                              double s_k) {
  const Vector dy = Subtract(y, y_tilde);
  return TuningRatio(SquaredNorm(coupling.ApplyAdjoint(dy)), SquaredNorm(dy),
                     s_k, r);
}

struct PdhgPrediction {
  Iterate w_tilde;
  Iterate dw;
  Vector at_dy;  // A^T dy
  double t = 0.0;
};

struct PdhgAdaptResult {
  PdhgPrediction prediction;
  PdhgState state;
  int inner_resolves = 0;
};

inline PdhgAdaptResult AdaptS(const SaddleProblem& problem, const Iterate& w,
                              const PdhgState& state,
                              const AdaptiveConfig& cfg) {
  PdhgAdaptResult out;
  out.state = state;
  PdhgPrediction& p = out.prediction;
  p.w_tilde = PredictPdhg(problem, w, state.r, state.s_k);
  p.dw.x = Subtract(w.x, p.w_tilde.x);
  auto measure = [&] {
    p.dw.y = Subtract(w.y, p.w_tilde.y);
    p.at_dy = problem.coupling.ApplyAdjoint(p.dw.y);
    p.t = TuningRatio(SquaredNorm(p.at_dy), SquaredNorm(p.dw.y), out.state.s_k,
                      out.state.r);
  };
  measure();
  while (p.t > cfg.nu) {
    if (out.inner_resolves >= cfg.max_inner) {
      throw SolverError(ErrorCode::kTuningStall,
                        "s_k tuning exceeded " + std::to_string(cfg.max_inner) +
                            " re-solves (t = " + std::to_string(p.t) + ")");
    }
    out.state.s_k *= p.t * cfg.theta;
    p.w_tilde.y = problem.dual_prox(w.y, p.w_tilde.x, out.state.s_k);
    ++out.inner_resolves;
    measure();
  }
  return out;
}

// dw^T Q dw = r ||dx||^2 + dx^T A^T dy + s_k ||dy||^2.
inline double QuadraticFormPdhg(std::span<const double> at_dy,
                                const Iterate& dw, double r, double s_k) {
  return r * SquaredNorm(dw.x) + Dot(dw.x, at_dy) + s_k * SquaredNorm(dw.y);
}

inline double QuadraticFormPdhg(const LinearCoupling& coupling,
                                const Iterate& dw, double r, double s_k) {
  return QuadraticFormPdhg(coupling.ApplyAdjoint(dw.y), dw, r, s_k);
}

// ||M dw||_H^2 = r ||dx + (1/r) A^T dy||^2 + (s_k^2/s_a) ||dy||^2.
inline double CorrectionNormPdhg(std::span<const double> at_dy,
                                 const Iterate& dw, double r, double s_k,
                                 double s_a) {
  double sq = 0.0;
  for (std::size_t i = 0; i < dw.x.size(); ++i) {
    const double e = dw.x[i] + at_dy[i] / r;
    sq += e * e;
  }
  return s_k * s_k / s_a * SquaredNorm(dw.y) + r * sq;
}

inline double CorrectionNormPdhg(const LinearCoupling& coupling,
                                 const Iterate& dw, double r, double s_k,
                                 double s_a) {
  return CorrectionNormPdhg(coupling.ApplyAdjoint(dw.y), dw, r, s_k, s_a);
}

// x^{k+1} = x^k - g (dx + (1/r) A^T dy),  y^{k+1} = y^k - g (s_k/s_a) dy.
inline Iterate CorrectPdhg(const Iterate& w, std::span<const double> at_dy,
                           const Iterate& dw, double step, double r, double s_k,
                           double s_a) {
  Iterate next = w;
  for (std::size_t i = 0; i < next.x.size(); ++i) {
    next.x[i] -= step * (dw.x[i] + at_dy[i] / r);
  }
  const double gy = step * (s_k / s_a);
  for (std::size_t i = 0; i < next.y.size(); ++i) next.y[i] -= gy * dw.y[i];
  return next;
}

inline Iterate CorrectPdhg(const Iterate& w, const Iterate& w_tilde,
                           double alpha_star, double gamma, double r,
                           double s_k, double s_a,
                           const LinearCoupling& coupling) {
  const Iterate dw = Subtract(w, w_tilde);
  return CorrectPdhg(w, coupling.ApplyAdjoint(dw.y), dw, gamma * alpha_star, r,
                     s_k, s_a);
}

inline PdhgState DecreaseS(const PdhgState& state, double t,
                           const AdaptiveConfig& cfg) {
  PdhgState next = state;
  if (t <= cfg.mu && state.s_k > state.s_lower) {
    next.s_k = std::max(state.s_k * (2.0 / 3.0), state.s_lower);
  }
  return next;
}

// ---------------------------------------------------------------------------
// Drivers.

namespace internal {

inline void BeginTrace(RunTrace& trace, const Iterate& w0,
                       const AdaptiveConfig& cfg) {
  trace.initial_norm = w0.Norm();
  trace.max_iterate_norm = trace.initial_norm;
  trace.parameters.insert({{"tau", cfg.tau},
                           {"kappa", cfg.kappa},
                           {"gamma", cfg.gamma},
                           {"theta", cfg.theta},
                           {"mu", cfg.mu},
                           {"nu", cfg.nu}});
  if (cfg.store_iterates) trace.iterates.push_back(w0);
}

// Appends the record for w -> next and reports whether the run stops.
inline bool FinishIteration(const SaddleProblem& problem,
                            const AdaptiveConfig& cfg, const Iterate& w,
                            const Iterate& next, IterationRecord rec,
                            RunTrace& trace) {
  if (!next.AllFinite()) {
    throw SolverError(
        ErrorCode::kNumericalBlowup,
        "non-finite iterate at iteration " + std::to_string(rec.iter_index),
        rec.iter_index);
  }
  rec.stop_residual = StopResidual(next, w);
  rec.iterate_norm = next.Norm();
  if (problem.objective) rec.objective = problem.objective(next.x);
  trace.max_iterate_norm = std::max(trace.max_iterate_norm, rec.iterate_norm);
  const bool stop =
      StopSatisfied(next, w, rec.stop_residual, cfg.rel_tol, cfg.abs_tol);
  trace.records.push_back(rec);
  if (cfg.store_iterates) trace.iterates.push_back(next);
  return stop;
}

}  // namespace internal

inline SolveResult SolveAdaptiveDphg(const SaddleProblem& problem,
                                     const Iterate& w0,
                                     const SpectrumInfo& spectrum,
                                     const AdaptiveConfig& cfg) {
  cfg.Validate();
  problem.CheckDimensions(w0, "SolveAdaptiveDphg");
  DphgState state = InitialDphgState(spectrum, cfg);

  SolveResult result;
  RunTrace& trace = result.trace;
  trace.parameters = {{"s", state.s},
                      {"r0", state.r_k},
                      {"r_a", state.r_a},
                      {"r_lower", state.r_lower},
                      {"r_upper", state.r_upper}};
  internal::BeginTrace(trace, w0, cfg);

  Iterate w = w0;
  for (int k = 1; k <= cfg.max_iters; ++k) {
    DphgAdaptResult adapted = AdaptR(problem, w, state, cfg);
    state = adapted.state;
    const DphgPrediction& p = adapted.prediction;
    const double sq_dx = SquaredNorm(p.dw.x);
    const double sq_dy = SquaredNorm(p.dw.y);

    IterationRecord rec;
    rec.iter_index = k;
    rec.reg_param = state.r_k;
    rec.tuning_ratio = p.t;
    rec.inner_resolves = adapted.inner_resolves;
    rec.tuning_lhs = SquaredNorm(p.a_dx) / state.s;
    rec.tuning_rhs = cfg.nu * state.r_k * sq_dx;
    rec.lower_h_norm_sq = state.r_lower * sq_dx + state.s * sq_dy;

    if (sq_dx == 0.0 && sq_dy == 0.0) {
      // w^k reproduces itself under the prediction: it solves the VI.
      rec.key_inequality_lhs = 0.0;
      rec.key_inequality_rhs = 0.0;
      internal::FinishIteration(problem, cfg, w, w, rec, trace);
      trace.converged = true;
      trace.reason = TerminationReason::kSolutionWitness;
      break;
    }

    const double q = QuadraticFormDphg(p.a_dx, p.dw, state.r_k, state.s);
    const double m =
        CorrectionNormDphg(p.a_dx, p.dw, state.r_k, state.r_a, state.s);
    const double alpha = StepSizeAlpha(q, m);
    rec.alpha_star = alpha;
    rec.key_inequality_lhs = q;
    rec.key_inequality_rhs = 0.5 * (state.r_k * sq_dx + state.s * sq_dy);

    Iterate next = CorrectDphg(w, p.a_dx, p.dw, cfg.gamma * alpha, state.r_k,
                               state.r_a, state.s);
    const bool stop = internal::FinishIteration(problem, cfg, w, next, rec,
                                                trace);
    w = std::move(next);
    if (stop) {
      trace.converged = true;
      trace.reason = TerminationReason::kConverged;
      break;
    }
    state = DecreaseR(state, p.t, cfg);
  }
  result.solution = std::move(w);
  return result;
}

inline SolveResult SolveAdaptivePdhg(const SaddleProblem& problem,
                                     const Iterate& w0,
                                     const SpectrumInfo& spectrum,
                                     const AdaptiveConfig& cfg) {
  cfg.Validate();
  problem.CheckDimensions(w0, "SolveAdaptivePdhg");
  PdhgState state = InitialPdhgState(spectrum, cfg);

  SolveResult result;
  RunTrace& trace = result.trace;
  trace.parameters = {{"r", state.r},
                      {"s0", state.s_k},
                      {"s_a", state.s_a},
                      {"s_lower", state.s_lower},
                      {"s_upper", state.s_upper}};
  internal::BeginTrace(trace, w0, cfg);

  Iterate w = w0;
  for (int k = 1; k <= cfg.max_iters; ++k) {
    PdhgAdaptResult adapted = AdaptS(problem, w, state, cfg);
    state = adapted.state;
    const PdhgPrediction& p = adapted.prediction;
    const double sq_dx = SquaredNorm(p.dw.x);
    const double sq_dy = SquaredNorm(p.dw.y);

    IterationRecord rec;
    rec.iter_index = k;
    rec.reg_param = state.s_k;
    rec.tuning_ratio = p.t;
    rec.inner_resolves = adapted.inner_resolves;
    rec.tuning_lhs = SquaredNorm(p.at_dy) / state.r;
    rec.tuning_rhs = cfg.nu * state.s_k * sq_dy;
    rec.lower_h_norm_sq = state.r * sq_dx + state.s_lower * sq_dy;

    if (sq_dx == 0.0 && sq_dy == 0.0) {
      rec.key_inequality_lhs = 0.0;
      rec.key_inequality_rhs = 0.0;
      internal::FinishIteration(problem, cfg, w, w, rec, trace);
      trace.converged = true;
      trace.reason = TerminationReason::kSolutionWitness;
      break;
    }

    const double q = QuadraticFormPdhg(p.at_dy, p.dw, state.r, state.s_k);
    const double m =
        CorrectionNormPdhg(p.at_dy, p.dw, state.r, state.s_k, state.s_a);
    const double alpha = StepSizeAlpha(q, m);
    rec.alpha_star = alpha;
    rec.key_inequality_lhs = q;
    rec.key_inequality_rhs = 0.5 * (state.r * sq_dx + state.s_k * sq_dy);

    Iterate next = CorrectPdhg(w, p.at_dy, p.dw, cfg.gamma * alpha, state.r,
                               state.s_k, state.s_a);
    const bool stop = internal::FinishIteration(problem, cfg, w, next, rec,
                                                trace);
    w = std::move(next);
    if (stop) {
      trace.converged = true;
      trace.reason = TerminationReason::kConverged;
      break;
    }
    state = DecreaseS(state, p.t, cfg);
  }
  result.solution = std::move(w);
  return result;
}

}  // namespace apdhg

#endif  // APDHG_ADAPTIVE_H_
