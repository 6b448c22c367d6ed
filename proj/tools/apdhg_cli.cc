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

// apdhg: command-line runner.
//
//   apdhg run --algorithm adaptive-dphg --n 100 --seed 1 --out-dir out
//   apdhg compare --algorithm cp-pda,heuristic-pda,adaptive-dphg --n 100
//   apdhg spectra --n 10
//   apdhg oracle --n 100 --seed 1 --out-dir inst
//
// Exit status: 0 converged, 2 unconverged, 64 usage error, 70 internal.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "apdhg/assignment.h"
#include "apdhg/assignment_io.h"
#include "apdhg/report.h"
#include "apdhg/spectrum.h"
#include "json.hpp"

namespace {

constexpr int kExitConverged = 0;
constexpr int kExitUnconverged = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

struct CommonFlags {
  std::string problem = "assignment";
  int n = 100;
  std::uint64_t seed = 0;
  std::string instance;
  std::string out_dir;
};

struct SolverFlags {
  double tol = 1e-10;
  int max_iters = 200000;
  std::optional<double> tau, kappa, gamma, theta, mu, nu, r, s;
  bool no_enforce = false;
  std::string trace;
};

void AddCommon(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--problem", f.problem,
                  "assignment | csv-instance | builtin-toy")
      ->capture_default_str();
  cmd->add_option("--n", f.n, "number of jobs")->capture_default_str();
  cmd->add_option("--seed", f.seed, "instance seed")->capture_default_str();
  cmd->add_option("--instance", f.instance, "cost CSV for csv-instance");
  cmd->add_option("--out-dir", f.out_dir, "directory for output files");
}

void AddSolver(CLI::App* cmd, SolverFlags& f) {
  cmd->add_option("--tol", f.tol, "relative stopping tolerance")
      ->capture_default_str();
  cmd->add_option("--max-iters", f.max_iters)->capture_default_str();
  cmd->add_option("--tau", f.tau);
  cmd->add_option("--kappa", f.kappa);
  cmd->add_option("--gamma", f.gamma);
  cmd->add_option("--theta", f.theta);
  cmd->add_option("--mu", f.mu);
  cmd->add_option("--nu", f.nu);
  cmd->add_option("--r", f.r, "primal regularization (fixed-step)");
  cmd->add_option("--s", f.s, "dual regularization (fixed-step)");
  cmd->add_flag("--no-enforce-cp-condition", f.no_enforce,
                "allow cp-pda overrides with r*s <= rho(A^T A)");
}

apdhg::RunSpec MakeSpec(const std::string& algorithm, const CommonFlags& c,
                        const SolverFlags& f) {
  apdhg::RunSpec spec;
  spec.algorithm = apdhg::ParseAlgorithm(algorithm);
  spec.problem = apdhg::ParseProblemKind(c.problem);
  spec.n_jobs = c.n;
  spec.seed = c.seed;
  spec.instance_path = c.instance;
  spec.tau = f.tau;
  spec.kappa = f.kappa;
  spec.gamma = f.gamma;
  spec.theta = f.theta;
  spec.mu = f.mu;
  spec.nu = f.nu;
  spec.r = f.r;
  spec.s = f.s;
  spec.enforce_cp_condition = !f.no_enforce;
  spec.rel_tol = f.tol;
  spec.max_iters = f.max_iters;
  spec.out_dir = c.out_dir;
  spec.trace_path = f.trace;
  return spec;
}

apdhg::AssignmentInstance LoadInstance(const CommonFlags& c) {
  const auto kind = apdhg::ParseProblemKind(c.problem);
  if (kind == apdhg::ProblemKind::kBuiltinToy) {
    throw apdhg::UsageError("this verb needs an assignment instance");
  }
  if (kind == apdhg::ProblemKind::kCsvInstance) {
    if (c.instance.empty()) {
      throw apdhg::UsageError("csv-instance needs --instance <path>");
    }
    return apdhg::ReadInstance(c.instance);
  }
  if (c.n < 1) throw apdhg::UsageError("--n must be >= 1");
  return apdhg::BuildInstance(c.n, c.seed);
}

int DoRun(const apdhg::RunSpec& spec) {
  const apdhg::RunReport report = apdhg::Run(spec);
  apdhg::WriteRunArtifacts(report);
  std::cout << apdhg::ReportToJson(report).dump(2) << '\n';
  return report.converged ? kExitConverged : kExitUnconverged;
}

int DoCompare(const std::vector<std::string>& algorithms,
              const CommonFlags& c, const SolverFlags& f) {
  std::vector<apdhg::RunSpec> specs;
  for (const std::string& a : algorithms) {
    apdhg::RunSpec spec = MakeSpec(a, c, f);
    spec.out_dir.clear();
    specs.push_back(spec);
  }
  const apdhg::Comparison cmp = apdhg::Compare(specs);
  std::cout << apdhg::FormatComparisonText(cmp);
  if (!c.out_dir.empty()) {
    const std::filesystem::path dir(c.out_dir);
    std::filesystem::create_directories(dir);
    std::ofstream csv(dir / "comparison.csv");
    apdhg::WriteComparisonCsv(cmp, csv);
    for (const apdhg::RunReport& rep : cmp.reports) {
      const std::string name(apdhg::AlgorithmName(rep.spec.algorithm));
      std::ofstream json(dir / (name + ".json"));
      json << apdhg::ReportToJson(rep).dump(2) << '\n';
      std::ofstream trace(dir / (name + "_trace.csv"));
      apdhg::WriteTraceCsv(rep.trace, trace);
    }
  }
  return cmp.all_converged && cmp.objectives_agree ? kExitConverged
                                                   : kExitUnconverged;
}

int DoSpectra(const CommonFlags& c) {
  const apdhg::AssignmentInstance inst = LoadInstance(c);
  const apdhg::SpectrumInfo exact = apdhg::ExactSpectra(inst.n_jobs);
  const apdhg::LinearCoupling a = apdhg::AssignmentOperator(inst.n_jobs);
  const apdhg::SpectrumInfo est = apdhg::EstimateSpectrum(a);
  auto to_json = [](const apdhg::SpectrumInfo& s) {
    return nlohmann::json{{"rho_ata", s.rho_ata},
                          {"rho_avg_ata", s.rho_avg_ata},
                          {"rho_avg_aat", s.rho_avg_aat},
                          {"method", apdhg::SpectrumMethodName(s.method)},
                          {"rho_converged", s.rho_converged}};
  };
  std::cout << nlohmann::json{{"n_jobs", inst.n_jobs},
                              {"exact", to_json(exact)},
                              {"estimated", to_json(est)}}
                   .dump(2)
            << '\n';
  return kExitConverged;
}

int DoOracle(const CommonFlags& c) {
  const apdhg::AssignmentInstance inst = LoadInstance(c);
  const apdhg::AssignmentOptimum opt = apdhg::HungarianOptimum(inst);
  if (!c.out_dir.empty()) {
    const std::filesystem::path dir(c.out_dir);
    std::filesystem::create_directories(dir);
    apdhg::WriteInstance(inst, dir / "instance.csv");
  }
  std::cout << nlohmann::json{{"n_jobs", inst.n_jobs},
                              {"seed", inst.seed},
                              {"objective", opt.objective},
                              {"column_of_row", opt.column_of_row}}
                   .dump(2)
            << '\n';
  return kExitConverged;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive primal-dual hybrid gradient solvers"};
  app.require_subcommand(1);

  CommonFlags run_common, cmp_common, spec_common, oracle_common;
  SolverFlags run_solver, cmp_solver;
  std::string run_algorithm = "adaptive-dphg";
  std::vector<std::string> cmp_algorithms{"cp-pda", "heuristic-pda",
                                          "adaptive-dphg"};

  CLI::App* run = app.add_subcommand("run", "solve one problem");
  run->add_option("--algorithm", run_algorithm,
                  "pdhg-fixed | cp-pda | heuristic-pda | adaptive-dphg | "
                  "adaptive-pdhg")
      ->capture_default_str();
  AddCommon(run, run_common);
  AddSolver(run, run_solver);
  run->add_option("--trace", run_solver.trace,
                  "trace CSV path (default <out-dir>/trace.csv)");

  CLI::App* cmp = app.add_subcommand("compare", "side-by-side algorithm comparison");
  cmp->add_option("--algorithm", cmp_algorithms, "comma-separated list")
      ->delimiter(',')
      ->capture_default_str();
  AddCommon(cmp, cmp_common);
  AddSolver(cmp, cmp_solver);

  CLI::App* spectra = app.add_subcommand("spectra", "coupling spectra");
  AddCommon(spectra, spec_common);

  CLI::App* oracle = app.add_subcommand("oracle", "exact assignment optimum");
  AddCommon(oracle, oracle_common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*run) return DoRun(MakeSpec(run_algorithm, run_common, run_solver));
    if (*cmp) return DoCompare(cmp_algorithms, cmp_common, cmp_solver);
    if (*spectra) return DoSpectra(spec_common);
    if (*oracle) return DoOracle(oracle_common);
  } catch (const apdhg::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const apdhg::SolverError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == apdhg::ErrorCode::kInvalidArgument ? kExitUsage
                                                          : kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
