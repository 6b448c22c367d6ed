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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "apdhg/report.h"
#include "json.hpp"

namespace apdhg {
namespace {

namespace fs = std::filesystem;

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

class ReportTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("apdhg_report_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST(NamesTest, RoundTrip) {
  for (const auto& [value, name] : kAlgorithmNames) {
    EXPECT_EQ(ParseAlgorithm(name), value);
    EXPECT_EQ(AlgorithmName(value), name);
  }
  for (const auto& [value, name] : kProblemNames) {
    EXPECT_EQ(ParseProblemKind(name), value);
  }
  EXPECT_THROW(ParseAlgorithm("simplex"), UsageError);
  EXPECT_THROW(ParseProblemKind("maxflow"), UsageError);
}

TEST(RunSpecTest, Validation) {
  RunSpec spec;
  spec.rel_tol = 0.0;
  EXPECT_THROW(spec.Validate(), UsageError);
  spec = {};
  spec.algorithm = Algorithm::kAdaptiveDphg;
  spec.r = 1.0;
  EXPECT_THROW(spec.Validate(), UsageError);
  spec = {};
  spec.algorithm = Algorithm::kCpPda;
  spec.tau = 1.0;
  EXPECT_THROW(spec.Validate(), UsageError);
  spec = {};
  spec.algorithm = Algorithm::kPdhgFixed;
  EXPECT_THROW(spec.Validate(), UsageError);
  spec.r = 1.0;
  spec.s = 1.0;
  EXPECT_NO_THROW(spec.Validate());
  spec = {};
  spec.problem = ProblemKind::kCsvInstance;
  EXPECT_THROW(spec.Validate(), UsageError);
}

TEST_F(ReportTest, AdaptiveRunWritesConsistentArtifacts) {
  RunSpec spec;
  spec.algorithm = Algorithm::kAdaptiveDphg;
  spec.n_jobs = 20;
  spec.seed = 4;
  spec.out_dir = dir_.string();
  const RunReport rep = apdhg::Run(spec);
  WriteRunArtifacts(rep);
  ASSERT_TRUE(rep.converged);
  EXPECT_NEAR(*rep.objective, HungarianOptimum(BuildInstance(20, 4)).objective,
              1e-6);

  const nlohmann::json j = nlohmann::json::parse(Slurp(dir_ / "report.json"));
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["algorithm"], "adaptive-dphg");
  EXPECT_EQ(j["converged"], true);
  EXPECT_GE(j["wall_seconds"].get<double>(), 0.0);
  EXPECT_LE(j["iterations"].get<int>(), spec.max_iters);
  EXPECT_DOUBLE_EQ(j["parameters"]["s"].get<double>(), 20.0);

  const std::vector<std::string> rows = Lines(Slurp(dir_ / "trace.csv"));
  ASSERT_EQ(static_cast<int>(rows.size()), rep.iterations + 1);
  EXPECT_EQ(rows[0], kTraceHeader);
  EXPECT_EQ(j["iterations"].get<int>(), rep.iterations);
  // Last column of the last row is the reported objective.
  const std::string& last = rows.back();
  const double obj = std::stod(last.substr(last.rfind(',') + 1));
  EXPECT_EQ(obj, j["objective"].get<double>());

  // Solution grid: rows and columns sum to one.
  const std::vector<std::string> grid = Lines(Slurp(dir_ / "solution.csv"));
  ASSERT_EQ(grid.size(), 20u);
  std::vector<double> col(20, 0.0);
  for (const std::string& line : grid) {
    std::stringstream ss(line);
    std::string cell;
    double row = 0.0;
    int j_idx = 0;
    while (std::getline(ss, cell, ',')) {
      const double v = std::stod(cell);
      row += v;
      col[j_idx++] += v;
    }
    EXPECT_NEAR(row, 1.0, 1e-8);
  }
  for (double c : col) EXPECT_NEAR(c, 1.0, 1e-8);
}

TEST_F(ReportTest, DeterministicTraces) {
  RunSpec spec;
  spec.algorithm = Algorithm::kHeuristicPda;
  spec.n_jobs = 15;
  spec.seed = 2;
  spec.trace_path = (dir_ / "a.csv").string();
  WriteRunArtifacts(apdhg::Run(spec));
  spec.trace_path = (dir_ / "b.csv").string();
  WriteRunArtifacts(apdhg::Run(spec));
  EXPECT_EQ(Slurp(dir_ / "a.csv"), Slurp(dir_ / "b.csv"));
}

TEST(RunTest, HeuristicCarriesApproximationNote) {
  RunSpec spec;
  spec.algorithm = Algorithm::kHeuristicPda;
  spec.n_jobs = 10;
  const RunReport rep = apdhg::Run(spec);
  ASSERT_FALSE(rep.notes.empty());
  EXPECT_NE(rep.notes.back().find("approximates"), std::string::npos);
  EXPECT_DOUBLE_EQ(rep.parameters.at("r"), 1.0);
  EXPECT_DOUBLE_EQ(rep.parameters.at("s"), 4.0);
}

TEST(RunTest, CpOverrideOnBoundaryIsUsageError) {
  RunSpec spec;
  spec.algorithm = Algorithm::kCpPda;
  spec.n_jobs = 10;
  spec.r = 2.0;
  spec.s = 10.0;  // r*s = 20 = 2n
  try {
    apdhg::Run(spec);
    FAIL();
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("r*s > rho(A^T A)"),
              std::string::npos);
  }
  spec.enforce_cp_condition = false;
  spec.max_iters = 10;
  EXPECT_NO_THROW(apdhg::Run(spec));
}

TEST(RunTest, CpPresetRunsDespiteBoundary) {
  RunSpec spec;
  spec.algorithm = Algorithm::kCpPda;
  spec.n_jobs = 20;
  const RunReport rep = apdhg::Run(spec);
  EXPECT_TRUE(rep.converged);
  EXPECT_NEAR(rep.parameters.at("r") * rep.parameters.at("s"), 40.0, 1e-9);
}

TEST(RunTest, RotationToyReportsUnconvergedWithGrowth) {
  RunSpec spec;
  spec.algorithm = Algorithm::kPdhgFixed;
  spec.problem = ProblemKind::kBuiltinToy;
  spec.max_iters = 100;
  const RunReport rep = apdhg::Run(spec);
  EXPECT_FALSE(rep.converged);
  EXPECT_EQ(rep.iterations, 100);
  EXPECT_GT(rep.norm_growth, 1.0);
  EXPECT_FALSE(rep.binarity_gap.has_value());
  const nlohmann::json j = ReportToJson(rep);
  EXPECT_EQ(j["termination"], "max-iterations");
  EXPECT_TRUE(j["binarity_gap"].is_null());
}

TEST(RunTest, SolverErrorIsCapturedInReport) {
  RunSpec spec;
  spec.algorithm = Algorithm::kAdaptiveDphg;
  spec.n_jobs = 30;
  spec.max_inner = 0;  // the first prediction needs at least one re-solve
  const RunReport rep = apdhg::Run(spec);
  ASSERT_TRUE(rep.error.has_value());
  EXPECT_FALSE(rep.converged);
  EXPECT_EQ(rep.error->rfind("tuning-stall: ", 0), 0u);
  EXPECT_FALSE(rep.binarity_gap.has_value());
  EXPECT_FALSE(ReportToJson(rep)["error"].is_null());
}

TEST_F(ReportTest, CsvInstanceMatchesGeneratedInstance) {
  fs::create_directories(dir_);
  WriteInstance(BuildInstance(12, 3), dir_ / "inst.csv");
  RunSpec spec;
  spec.problem = ProblemKind::kCsvInstance;
  spec.instance_path = (dir_ / "inst.csv").string();
  const RunReport from_csv = apdhg::Run(spec);
  spec.problem = ProblemKind::kAssignment;
  spec.n_jobs = 12;
  spec.seed = 3;
  const RunReport generated = apdhg::Run(spec);
  EXPECT_EQ(from_csv.iterations, generated.iterations);
  EXPECT_EQ(from_csv.objective, generated.objective);
  EXPECT_EQ(from_csv.seed, 3u);
}

TEST(CompareTest, SingleSpecAndMismatch) {
  RunSpec spec;
  spec.n_jobs = 10;
  const Comparison one = Compare({spec});
  EXPECT_EQ(one.rows.size(), 1u);
  EXPECT_TRUE(one.objectives_agree);
  RunSpec other = spec;
  other.seed = 1;
  EXPECT_THROW(Compare({spec, other}), UsageError);
  EXPECT_THROW(Compare({}), UsageError);
}

TEST(CompareTest, ThreeAlgorithmsAgree) {
  std::vector<RunSpec> specs;
  for (Algorithm a : {Algorithm::kCpPda, Algorithm::kHeuristicPda,
                      Algorithm::kAdaptiveDphg}) {
    RunSpec s;
    s.algorithm = a;
    s.n_jobs = 30;
    s.seed = 1;
    specs.push_back(s);
  }
  const Comparison cmp = Compare(specs);
  ASSERT_EQ(cmp.rows.size(), 3u);
  EXPECT_TRUE(cmp.all_converged);
  EXPECT_TRUE(cmp.objectives_agree);
  const std::string text = FormatComparisonText(cmp);
  EXPECT_NE(text.find("Iter."), std::string::npos);
  EXPECT_NE(text.find("CPU(s)"), std::string::npos);
  std::stringstream csv;
  WriteComparisonCsv(cmp, csv);
  EXPECT_EQ(Lines(csv.str()).size(), 4u);
}

TEST_F(ReportTest, SolutionGridPgm) {
  const int n = 5;
  const Vector perm = PermutationMatrix(std::vector<int>{2, 0, 4, 1, 3});
  DumpSolutionGrid(perm, n, dir_ / "p.csv", dir_ / "p.pgm");
  std::stringstream pgm(Slurp(dir_ / "p.pgm"));
  std::string magic;
  int w = 0, h = 0, maxval = 0;
  pgm >> magic >> w >> h >> maxval;
  EXPECT_EQ(magic, "P2");
  EXPECT_EQ(w, n);
  EXPECT_EQ(h, n);
  EXPECT_EQ(maxval, 255);
  std::vector<int> black_per_row(n, 0), black_per_col(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int v = -1;
      pgm >> v;
      if (v == 0) {
        ++black_per_row[i];
        ++black_per_col[j];
      } else {
        EXPECT_EQ(v, 255);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    EXPECT_EQ(black_per_row[i], 1);
    EXPECT_EQ(black_per_col[i], 1);
  }

  DumpSolutionGrid(InitialIterate(4).x, 4, dir_ / "u.csv", dir_ / "u.pgm");
  std::stringstream u(Slurp(dir_ / "u.pgm"));
  u >> magic >> w >> h >> maxval;
  int first = -1;
  u >> first;
  EXPECT_EQ(first, 191);  // round(255 * 0.75)
  for (int k = 1; k < 16; ++k) {
    int v = -1;
    u >> v;
    EXPECT_EQ(v, first);
  }
  EXPECT_THROW(DumpSolutionGrid(perm, 4, dir_ / "x.csv", dir_ / "x.pgm"),
               SolverError);
}

}  // namespace
}  // namespace apdhg
