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

// Spectral quantities of a coupling used by the step-size rules:
// the largest eigenvalue rho(A^T A) = rho(A A^T) and the average spectra
// Trace(A^T A)/n and Trace(A A^T)/m.

#ifndef APDHG_SPECTRUM_H_
#define APDHG_SPECTRUM_H_

#include <cmath>
#include <cstdint>
#include <string_view>

#include "apdhg/core.h"
#include "apdhg/random.h"

namespace apdhg {

enum class SpectrumMethod { kExactProvided, kPowerIteration, kTraceColumns };

inline std::string_view SpectrumMethodName(SpectrumMethod method) {
  switch (method) {
    case SpectrumMethod::kExactProvided:
      return "exact-provided";
    case SpectrumMethod::kPowerIteration:
      return "power-iteration";
    case SpectrumMethod::kTraceColumns:
      return "trace-columns";
  }
  return "unknown";
}

struct SpectrumInfo {
  double rho_ata = 0.0;      // largest eigenvalue of A^T A
  double rho_avg_ata = 0.0;  // Trace(A^T A) / n
  double rho_avg_aat = 0.0;  // Trace(A A^T) / m
  SpectrumMethod method = SpectrumMethod::kExactProvided;
  // False when rho_ata came from a power iteration that hit its cap.
  bool rho_converged = true;

  // Spectrum of the role-swapped coupling -A^T.
  SpectrumInfo Swapped() const {
    SpectrumInfo out = *this;
    out.rho_avg_ata = rho_avg_aat;
    out.rho_avg_aat = rho_avg_ata;
    return out;
  }
};

struct AverageSpectrum {
  double ata = 0.0;
  double aat = 0.0;
};

// Trace(A^T A) = sum_j ||A e_j||^2, one matvec per primal coordinate unless
// the coupling carries a closed-form trace.
inline double TraceAtA(const LinearCoupling& coupling) {
  if (auto t = coupling.trace_ata()) return *t;
  const std::size_t n = coupling.n_primal();
  Vector e(n, 0.0);
  double trace = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    e[j] = 1.0;
    trace += SquaredNorm(coupling.Apply(e));
    e[j] = 0.0;
  }
  return trace;
}

inline AverageSpectrum ComputeAverageSpectrum(const LinearCoupling& coupling) {
  const double trace = TraceAtA(coupling);
  return {trace / static_cast<double>(coupling.n_primal()),
          trace / static_cast<double>(coupling.m_dual())};
}

struct SpectralNormEstimate {
  double value = 0.0;  // Rayleigh-quotient estimate of rho(A^T A)
  int iterations = 0;
  bool converged = false;
};

inline constexpr double kDefaultPowerTol = 1e-9;
inline constexpr int kDefaultPowerMaxIters = 5000;
inline constexpr std::uint64_t kDefaultPowerSeed = 0x2545F4914F6CDD1DULL;

// Power iteration on A^T A from a seeded random start. Stops when the
// Rayleigh quotient changes by less than tol (relative) between sweeps. On
// hitting max_iters the best estimate is returned with converged = false.
inline SpectralNormEstimate EstimateSpectralNormSquared(
    const LinearCoupling& coupling, double tol = kDefaultPowerTol,
    int max_iters = kDefaultPowerMaxIters,
    std::uint64_t seed = kDefaultPowerSeed) {
  if (!(tol > 0.0)) {
    throw SolverError(ErrorCode::kInvalidArgument,
                      "EstimateSpectralNormSquared: tol must be positive");
  }
  const std::size_t n = coupling.n_primal();
  SplitMix64 rng(seed);
  Vector v(n);
  for (double& e : v) e = rng.NextUniform(-1.0, 1.0);
  double norm = Norm(v);
  if (norm == 0.0) {
    v.assign(n, 1.0);
    norm = Norm(v);
  }
  for (double& e : v) e /= norm;

  SpectralNormEstimate est;
  double previous = 0.0;
  for (int it = 1; it <= max_iters; ++it) {
    const Vector av = coupling.Apply(v);
    const double rayleigh = SquaredNorm(av);  // v^T A^T A v, ||v|| = 1
    est.value = rayleigh;
    est.iterations = it;
    if (rayleigh == 0.0) {
      // v is in the null space; for a random start this means A = 0.
      est.converged = true;
      return est;
    }
    if (it > 1 && std::abs(rayleigh - previous) <= tol * rayleigh) {
      est.converged = true;
      return est;
    }
    previous = rayleigh;
    Vector next = coupling.ApplyAdjoint(av);
    const double next_norm = Norm(next);
    if (next_norm == 0.0) {
      est.converged = true;
      return est;
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = next[i] / next_norm;
  }
  return est;
}

// Column-sweep average spectra plus a power-iteration estimate of rho.
inline SpectrumInfo EstimateSpectrum(const LinearCoupling& coupling,
                                     double tol = kDefaultPowerTol,
                                     int max_iters = kDefaultPowerMaxIters) {
  const AverageSpectrum avg = ComputeAverageSpectrum(coupling);
  const SpectralNormEstimate rho =
      EstimateSpectralNormSquared(coupling, tol, max_iters);
  return {.rho_ata = rho.value,
          .rho_avg_ata = avg.ata,
          .rho_avg_aat = avg.aat,
          .method = SpectrumMethod::kPowerIteration,
          .rho_converged = rho.converged};
}

}  // namespace apdhg

#endif  // APDHG_SPECTRUM_H_
