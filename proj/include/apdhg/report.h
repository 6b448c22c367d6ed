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

// Run orchestration and report files: building a problem from a RunSpec,
// applying the per-algorithm presets, timing the solve, and writing the
// JSON report, the per-iteration trace CSV and the solution grid.

#ifndef APDHG_REPORT_H_
#define APDHG_REPORT_H_

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "apdhg/adaptive.h"
#include "apdhg/assignment.h"
#include "apdhg/assignment_io.h"
#include "apdhg/baseline.h"
#include "apdhg/spectrum.h"
#include "apdhg/toy_problems.h"
#include "json.hpp"

namespace apdhg {

inline constexpr int kReportSchemaVersion = 1;

// Invalid RunSpec or inconsistent compare request.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Algorithm {
  kPdhgFixed,
  kCpPda,
  kHeuristicPda,
  kAdaptiveDphg,
  kAdaptivePdhg,
};

enum class ProblemKind {
  kAssignment,
  kCsvInstance,
  kBuiltinToy,
};

inline constexpr std::array<std::pair<Algorithm, std::string_view>, 5>
    kAlgorithmNames{{{Algorithm::kPdhgFixed, "pdhg-fixed"},
                     {Algorithm::kCpPda, "cp-pda"},
                     {Algorithm::kHeuristicPda, "heuristic-pda"},
                     {Algorithm::kAdaptiveDphg, "adaptive-dphg"},
                     {Algorithm::kAdaptivePdhg, "adaptive-pdhg"}}};

inline constexpr std::array<std::pair<ProblemKind, std::string_view>, 3>
    kProblemNames{{{ProblemKind::kAssignment, "assignment"},
                   {ProblemKind::kCsvInstance, "csv-instance"},
                   {ProblemKind::kBuiltinToy, "builtin-toy"}}};

inline std::string_view AlgorithmName(Algorithm a) {
  for (const auto& [value, name] : kAlgorithmNames) {
    if (value == a) return name;
  }
  return "unknown";
}

inline Algorithm ParseAlgorithm(std::string_view name) {
  for (const auto& [value, n] : kAlgorithmNames) {
    if (n == name) return value;
  }
  throw UsageError("unknown algorithm '" + std::string(name) + "'");
}

inline std::string_view ProblemKindName(ProblemKind p) {
  for (const auto& [value, name] : kProblemNames) {
    if (value == p) return name;
  }
  return "unknown";
}

inline ProblemKind ParseProblemKind(std::string_view name) {
  for (const auto& [value, n] : kProblemNames) {
    if (n == name) return value;
  }
  throw UsageError("unknown problem '" + std::string(name) + "'");
}

inline bool IsAdaptive(Algorithm a) {
  return a == Algorithm::kAdaptiveDphg || a == Algorithm::kAdaptivePdhg;
}

struct RunSpec {
  Algorithm algorithm = Algorithm::kAdaptiveDphg;
  ProblemKind problem = ProblemKind::kAssignment;
  int n_jobs = 100;
  std::uint64_t seed = 0;
  std::string instance_path;  // csv-instance only

  // Overrides; unset fields take the preset.
  std::optional<double> tau, kappa, gamma, theta, mu, nu;
  std::optional<double> r, s;
  std::optional<int> max_inner;
  bool enforce_cp_condition = true;

  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  int max_iters = 200000;

  std::string out_dir;     // empty: no files
  std::string trace_path;  // empty: <out_dir>/trace.csv
  bool keep_iterates = false;

  void Validate() const {
    if (!(rel_tol > 0.0)) throw UsageError("--tol must be positive");
    if (abs_tol < 0.0) throw UsageError("absolute tolerance must be >= 0");
    if (max_iters < 1) throw UsageError("--max-iters must be >= 1");
    if (problem == ProblemKind::kAssignment && n_jobs < 1) {
      throw UsageError("--n must be >= 1");
    }
    if (problem == ProblemKind::kCsvInstance && instance_path.empty()) {
      throw UsageError("csv-instance needs --instance <path>");
    }
    const bool step_override = r.has_value() || s.has_value();
    if (IsAdaptive(algorithm)) {
      if (step_override) {
        throw UsageError("--r/--s apply to fixed-step algorithms only");
      }
    } else {
      if (tau || kappa || gamma || theta || mu || nu || max_inner) {
        throw UsageError(
            "--tau/--kappa/--gamma/--theta/--mu/--nu apply to adaptive "
            "algorithms only");
      }
      const bool needs_steps = algorithm == Algorithm::kPdhgFixed
                                   ? problem != ProblemKind::kBuiltinToy
                                   : problem == ProblemKind::kBuiltinToy;
      if (needs_steps && !(r && s)) {
        throw UsageError(std::string(AlgorithmName(algorithm)) + " on " +
                         std::string(ProblemKindName(problem)) +
                         " needs both --r and --s");
      }
    }
  }
};

struct RunReport {
  RunSpec spec;
  int n_jobs = 0;  // size of the instance actually solved
  std::uint64_t seed = 0;
  bool converged = false;
  TerminationReason reason = TerminationReason::kMaxIterations;
  std::optional<std::string> error;
  int iterations = 0;
  double wall_seconds = 0.0;
  std::optional<double> objective;
  std::optional<double> binarity_gap;
  std::optional<double> feasibility_gap;
  std::optional<double> dual_slack;
  int total_inner_resolves = 0;
  std::optional<double> min_alpha_star;
  double norm_growth = 1.0;
  SpectrumInfo spectrum;
  std::map<std::string, double> parameters;
  std::vector<std::string> notes;

  Iterate solution;
  RunTrace trace;
};

// A problem ready to solve, built outside the timed region.
struct BuiltProblem {
  SaddleProblem problem;
  Iterate w0;
  SpectrumInfo spectrum;
  std::optional<AssignmentInstance> instance;
  std::vector<std::string> notes;
};

inline BuiltProblem BuildProblem(const RunSpec& spec) {
  switch (spec.problem) {
    case ProblemKind::kAssignment:
    case ProblemKind::kCsvInstance: {
      AssignmentInstance inst = spec.problem == ProblemKind::kAssignment
                                    ? BuildInstance(spec.n_jobs, spec.seed)
                                    : ReadInstance(spec.instance_path);
      BuiltProblem b{MakeSaddleProblem(inst), InitialIterate(inst.n_jobs),
                     ExactSpectra(inst.n_jobs), inst, {}};
      return b;
    }
    case ProblemKind::kBuiltinToy: {
      BuiltProblem b{RotationToy(),
                     {{1.0}, {1.0}},
                     {.rho_ata = 1.0,
                      .rho_avg_ata = 1.0,
                      .rho_avg_aat = 1.0,
                      .method = SpectrumMethod::kExactProvided},
                     std::nullopt,
                     {"builtin-toy: min_x max_y -y*x over R x R from w0 = "
                      "(1, 1)"}};
      return b;
    }
  }
  throw UsageError("unsupported problem kind");
}

inline AdaptiveConfig ResolveAdaptiveConfig(const RunSpec& spec) {
  AdaptiveConfig cfg;
  if (spec.tau) cfg.tau = *spec.tau;
  if (spec.kappa) cfg.kappa = *spec.kappa;
  if (spec.gamma) cfg.gamma = *spec.gamma;
  if (spec.theta) cfg.theta = *spec.theta;
  if (spec.mu) cfg.mu = *spec.mu;
  if (spec.nu) cfg.nu = *spec.nu;
  if (spec.max_inner) cfg.max_inner = *spec.max_inner;
  cfg.rel_tol = spec.rel_tol;
  cfg.abs_tol = spec.abs_tol;
  cfg.max_iters = spec.max_iters;
  cfg.store_iterates = spec.keep_iterates;
  return cfg;
}

inline FixedStepConfig ResolveFixedStepConfig(const RunSpec& spec,
                                              int n_jobs) {
  FixedStepConfig cfg;
  const bool overridden = spec.r.has_value() || spec.s.has_value();
  if (spec.algorithm == Algorithm::kCpPda && !overridden) {
    cfg = ChambollePockPreset(n_jobs);
  } else if (spec.algorithm == Algorithm::kHeuristicPda && !overridden) {
    cfg = HeuristicPdaPreset(n_jobs);
  } else {
    if (spec.algorithm == Algorithm::kCpPda) {
      cfg = ChambollePockPreset(std::max(n_jobs, 1));
    } else if (spec.algorithm == Algorithm::kHeuristicPda) {
      cfg = HeuristicPdaPreset(std::max(n_jobs, 1));
    }
    if (spec.r) cfg.r = *spec.r;
    if (spec.s) cfg.s = *spec.s;
    cfg.enforce_cp_condition = spec.enforce_cp_condition;
  }
  cfg.rel_tol = spec.rel_tol;
  cfg.abs_tol = spec.abs_tol;
  cfg.max_iters = spec.max_iters;
  cfg.store_iterates = spec.keep_iterates;
  return cfg;
}

// Builds, solves and audits. Configuration problems raise UsageError;
// failures inside the solver are captured in the report.
inline RunReport Run(const RunSpec& spec) {
  spec.Validate();
  BuiltProblem built = [&] {
    try {
      return BuildProblem(spec);
    } catch (const SolverError& e) {
      throw UsageError(e.what());
    }
  }();

  RunReport report;
  report.spec = spec;
  report.n_jobs = built.instance ? built.instance->n_jobs
                                 : static_cast<int>(built.problem.n());
  report.seed = built.instance ? built.instance->seed : spec.seed;
  report.spectrum = built.spectrum;
  report.notes = built.notes;
  if (spec.algorithm == Algorithm::kHeuristicPda) {
    report.notes.push_back(
        "heuristic-pda approximates the heuristic primal-dual method "
        "by fixed-step PDHG with r = 10/n, s = 0.4n");
  }

  std::optional<AdaptiveConfig> adaptive;
  std::optional<FixedStepConfig> fixed;
  try {
    if (IsAdaptive(spec.algorithm)) {
      adaptive = ResolveAdaptiveConfig(spec);
      adaptive->Validate();
    } else {
      fixed = ResolveFixedStepConfig(spec, report.n_jobs);
      fixed->Validate();
      if (spec.algorithm == Algorithm::kCpPda && fixed->enforce_cp_condition &&
          !(fixed->r * fixed->s > built.spectrum.rho_ata)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "cp-pda requires r*s > rho(A^T A); got r*s = "
            << fixed->r * fixed->s
            << ", rho(A^T A) = " << built.spectrum.rho_ata
            << " (pass --no-enforce-cp-condition to run anyway)";
        throw UsageError(msg.str());
      }
    }
  } catch (const SolverError& e) {
    throw UsageError(e.what());
  }

  SolveResult result;
  result.solution = built.w0;
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (spec.algorithm) {
      case Algorithm::kPdhgFixed:
      case Algorithm::kHeuristicPda:
        result = SolvePdhgFixed(built.problem, built.w0, *fixed);
        break;
      case Algorithm::kCpPda:
        result = SolveChambollePock(built.problem, built.w0, *fixed,
                                    built.spectrum.rho_ata);
        break;
      case Algorithm::kAdaptiveDphg:
        result = SolveAdaptiveDphg(built.problem, built.w0, built.spectrum,
                                   *adaptive);
        break;
      case Algorithm::kAdaptivePdhg:
        result = SolveAdaptivePdhg(built.problem, built.w0, built.spectrum,
                                   *adaptive);
        break;
    }
  } catch (const SolverError& e) {
    report.error = e.what();
  }
  const auto stop = std::chrono::steady_clock::now();
  report.wall_seconds = std::chrono::duration<double>(stop - start).count();

  RunTrace& trace = result.trace;
  report.converged = !report.error && trace.converged;
  report.reason = trace.reason;
  report.iterations = trace.iterations();
  report.total_inner_resolves = trace.total_inner_resolves();
  report.min_alpha_star = trace.min_alpha_star();
  report.norm_growth = trace.norm_growth();
  report.parameters = trace.parameters;
  if (fixed) {
    report.parameters["r"] = fixed->r;
    report.parameters["s"] = fixed->s;
  }
  if (!trace.records.empty()) report.objective = trace.records.back().objective;
  if (built.instance && !report.error) {
    const AssignmentSolution audit =
        AuditSolution(*built.instance, result.solution.x, result.solution.y);
    report.binarity_gap = audit.binarity_gap;
    report.feasibility_gap = audit.feasibility_gap;
    report.dual_slack = audit.dual_slack;
  }
  report.solution = std::move(result.solution);
  report.trace = std::move(trace);
  return report;
}

// ---------------------------------------------------------------------------
// Serialization.

namespace internal {

inline nlohmann::json OptionalJson(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

inline nlohmann::json FiniteJson(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

inline std::string CsvCell(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string CsvCell(const std::optional<double>& v) {
  return v ? CsvCell(*v) : std::string();
}

inline void EnsureParent(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
}

inline std::ofstream OpenForWrite(const std::filesystem::path& path) {
  EnsureParent(path);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

}  // namespace internal

inline nlohmann::json ReportToJson(const RunReport& r) {
  using internal::FiniteJson;
  using internal::OptionalJson;
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : r.parameters) params[k] = FiniteJson(v);
  nlohmann::json j = {
      {"schema_version", kReportSchemaVersion},
      {"algorithm", AlgorithmName(r.spec.algorithm)},
      {"problem", ProblemKindName(r.spec.problem)},
      {"n_jobs", r.n_jobs},
      {"seed", r.seed},
      {"converged", r.converged},
      {"termination", TerminationReasonName(r.reason)},
      {"error", r.error ? nlohmann::json(*r.error) : nlohmann::json(nullptr)},
      {"iterations", r.iterations},
      {"max_iters", r.spec.max_iters},
      {"rel_tol", r.spec.rel_tol},
      {"wall_seconds", r.wall_seconds},
      {"objective", OptionalJson(r.objective)},
      {"binarity_gap", OptionalJson(r.binarity_gap)},
      {"feasibility_gap", OptionalJson(r.feasibility_gap)},
      {"dual_slack", OptionalJson(r.dual_slack)},
      {"total_inner_resolves", r.total_inner_resolves},
      {"min_alpha_star", OptionalJson(r.min_alpha_star)},
      {"norm_growth", FiniteJson(r.norm_growth)},
      {"spectrum",
       {{"rho_ata", r.spectrum.rho_ata},
        {"rho_avg_ata", r.spectrum.rho_avg_ata},
        {"rho_avg_aat", r.spectrum.rho_avg_aat},
        {"method", SpectrumMethodName(r.spectrum.method)}}},
      {"parameters", params},
      {"notes", r.notes},
  };
  if (r.spec.problem == ProblemKind::kCsvInstance) {
    j["instance"] = r.spec.instance_path;
  }
  return j;
}

inline constexpr std::string_view kTraceHeader =
    "iter,reg_param,tuning_ratio,inner_resolves,alpha_star,"
    "key_inequality_lhs,key_inequality_rhs,tuning_lhs,tuning_rhs,"
    "lower_h_norm_sq,stop_residual,iterate_norm,objective";

inline void WriteTraceCsv(const RunTrace& trace, std::ostream& out) {
  using internal::CsvCell;
  out << kTraceHeader << '\n';
  for (const IterationRecord& rec : trace.records) {
    out << rec.iter_index << ',' << CsvCell(rec.reg_param) << ','
        << CsvCell(rec.tuning_ratio) << ',' << rec.inner_resolves << ','
        << CsvCell(rec.alpha_star) << ',' << CsvCell(rec.key_inequality_lhs)
        << ',' << CsvCell(rec.key_inequality_rhs) << ','
        << CsvCell(rec.tuning_lhs) << ',' << CsvCell(rec.tuning_rhs) << ','
        << CsvCell(rec.lower_h_norm_sq) << ',' << CsvCell(rec.stop_residual)
        << ',' << CsvCell(rec.iterate_norm) << ',' << CsvCell(rec.objective)
        << '\n';
  }
}

// n x n grid as CSV (one matrix row per line) and as a plain PGM with
// 0 -> white (255) and 1 -> black (0). Values are clamped to [0, 1].
inline void DumpSolutionGrid(std::span<const double> x, int n_jobs,
                             const std::filesystem::path& csv_path,
                             const std::filesystem::path& pgm_path) {
  const auto n = static_cast<std::size_t>(n_jobs);
  if (n_jobs < 1 || x.size() != n * n) {
    throw SolverError(ErrorCode::kInvalidArgument,
                      "DumpSolutionGrid: length(x) must equal n^2");
  }
  std::ofstream csv = internal::OpenForWrite(csv_path);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) csv << ',';
      csv << internal::CsvCell(x[i * n + j]);
    }
    csv << '\n';
  }
  std::ofstream pgm = internal::OpenForWrite(pgm_path);
  pgm << "P2\n" << n << ' ' << n << "\n255\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = std::clamp(x[i * n + j], 0.0, 1.0);
      if (j > 0) pgm << ' ';
      pgm << static_cast<int>(std::lround(255.0 * (1.0 - v)));
    }
    pgm << '\n';
  }
  if (!csv || !pgm) throw std::runtime_error("solution grid write failed");
}

// report.json, the trace CSV and (assignment runs) solution.csv/.pgm.
inline void WriteRunArtifacts(const RunReport& report) {
  const RunSpec& spec = report.spec;
  if (!spec.out_dir.empty()) {
    const std::filesystem::path dir(spec.out_dir);
    std::ofstream json = internal::OpenForWrite(dir / "report.json");
    json << ReportToJson(report).dump(2) << '\n';
    if (spec.problem != ProblemKind::kBuiltinToy && !report.error) {
      DumpSolutionGrid(report.solution.x, report.n_jobs, dir / "solution.csv",
                       dir / "solution.pgm");
    }
  }
  std::filesystem::path trace_path = spec.trace_path;
  if (trace_path.empty() && !spec.out_dir.empty()) {
    trace_path = std::filesystem::path(spec.out_dir) / "trace.csv";
  }
  if (!trace_path.empty()) {
    std::ofstream csv = internal::OpenForWrite(trace_path);
    WriteTraceCsv(report.trace, csv);
  }
}

// ---------------------------------------------------------------------------
// Comparison.

inline constexpr double kObjectiveAgreementTol = 1e-6;

struct ComparisonRow {
  Algorithm algorithm = Algorithm::kAdaptiveDphg;
  bool converged = false;
  int iterations = 0;
  double cpu_seconds = 0.0;
  std::optional<double> objective;
};

struct Comparison {
  std::vector<ComparisonRow> rows;
  std::vector<RunReport> reports;
  // max - min objective over converged rows; 0 with fewer than two.
  double objective_spread = 0.0;
  bool objectives_agree = true;
  bool all_converged = true;
};

inline Comparison Compare(const std::vector<RunSpec>& specs) {
  if (specs.empty()) throw UsageError("compare needs at least one algorithm");
  const RunSpec& ref = specs.front();
  for (const RunSpec& s : specs) {
    const bool same =
        s.problem == ref.problem &&
        (s.problem != ProblemKind::kAssignment ||
         (s.n_jobs == ref.n_jobs && s.seed == ref.seed)) &&
        (s.problem != ProblemKind::kCsvInstance ||
         s.instance_path == ref.instance_path);
    if (!same) throw UsageError("compare specs must share one instance");
  }
  Comparison cmp;
  std::optional<double> lo, hi;
  for (const RunSpec& s : specs) {
    RunReport rep = Run(s);
    ComparisonRow row{s.algorithm, rep.converged, rep.iterations,
                      rep.wall_seconds, rep.objective};
    cmp.all_converged = cmp.all_converged && rep.converged;
    if (rep.converged && rep.objective) {
      lo = lo ? std::min(*lo, *rep.objective) : *rep.objective;
      hi = hi ? std::max(*hi, *rep.objective) : *rep.objective;
    }
    cmp.rows.push_back(row);
    cmp.reports.push_back(std::move(rep));
  }
  if (lo) cmp.objective_spread = *hi - *lo;
  cmp.objectives_agree = cmp.objective_spread <= kObjectiveAgreementTol;
  return cmp;
}

inline std::string FormatComparisonText(const Comparison& cmp) {
  std::ostringstream out;
  out << std::left << std::setw(16) << "Algorithm" << std::right
      << std::setw(10) << "Iter." << std::setw(12) << "CPU(s)"
      << std::setw(22) << "Phi(x^k)" << "  status\n";
  for (const ComparisonRow& row : cmp.rows) {
    out << std::left << std::setw(16) << AlgorithmName(row.algorithm)
        << std::right << std::setw(10) << row.iterations << std::setw(12)
        << std::fixed << std::setprecision(3) << row.cpu_seconds;
    if (row.objective) {
      out << std::setw(22) << std::setprecision(10) << *row.objective;
    } else {
      out << std::setw(22) << "-";
    }
    out << "  " << (row.converged ? "converged" : "unconverged") << '\n';
  }
  out << std::defaultfloat << std::setprecision(3)
      << "objective spread: " << cmp.objective_spread
      << (cmp.objectives_agree ? " (agree" : " (DISAGREE")
      << " within 1e-6)\n";
  return out.str();
}

inline void WriteComparisonCsv(const Comparison& cmp, std::ostream& out) {
  out << "algorithm,iterations,cpu_seconds,objective,converged\n";
  for (const ComparisonRow& row : cmp.rows) {
    out << AlgorithmName(row.algorithm) << ',' << row.iterations << ','
        << internal::CsvCell(row.cpu_seconds) << ','
        << internal::CsvCell(row.objective) << ','
        << (row.converged ? "true" : "false") << '\n';
  }
}

}  // namespace apdhg

#endif  // APDHG_REPORT_H_
