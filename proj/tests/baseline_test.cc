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

#include <cmath>
#include <string>

#include "apdhg/assignment.h"
#include "apdhg/baseline.h"
#include "apdhg/toy_problems.h"
#include "test_util.h"

namespace apdhg {
namespace {

TEST(PresetTest, Heuristic) {
  const FixedStepConfig c100 = HeuristicPdaPreset(100);
  EXPECT_DOUBLE_EQ(c100.r, 0.1);
  EXPECT_DOUBLE_EQ(c100.s, 40.0);
  EXPECT_FALSE(c100.enforce_cp_condition);
  const FixedStepConfig c1 = HeuristicPdaPreset(1);
  EXPECT_DOUBLE_EQ(c1.r, 10.0);
  EXPECT_DOUBLE_EQ(c1.s, 0.4);
  for (int n = 1; n <= 300; n += 7) {
    const FixedStepConfig c = HeuristicPdaPreset(n);
    EXPECT_NEAR(c.r * c.s, 4.0, 1e-12);
  }
  EXPECT_THROW(HeuristicPdaPreset(0), SolverError);
}

TEST(PresetTest, ChambollePockProductIsRho) {
  for (int n : {2, 20, 100, 200}) {
    const FixedStepConfig c = ChambollePockPreset(n);
    EXPECT_NEAR(c.r * c.s, 2.0 * n, 1e-9 * n);
    EXPECT_NEAR(c.r, 10.0 / n * std::sqrt(n / 2.0), 1e-15);
  }
}

TEST(ConfigTest, RejectsBadValues) {
  FixedStepConfig cfg;
  cfg.r = 0.0;
  EXPECT_THROW(cfg.Validate(), SolverError);
  cfg = {};
  cfg.rel_tol = 0.0;
  EXPECT_THROW(cfg.Validate(), SolverError);
  cfg = {};
  cfg.s = -1.0;
  EXPECT_THROW(SolvePdhgFixed(RotationToy(), {{1.0}, {1.0}}, cfg), SolverError);
}

TEST(PdhgFixedTest, ZeroProblemIsFixedPoint) {
  const Iterate w0{{1.0, -2.0, 3.0}, {0.5, 4.0}};
  FixedStepConfig cfg;
  cfg.r = 3.0;
  cfg.s = 0.25;
  const SolveResult res = SolvePdhgFixed(ZeroProblem(3, 2), w0, cfg);
  EXPECT_EQ(res.solution, w0);
  EXPECT_TRUE(res.trace.converged);
  EXPECT_EQ(res.trace.iterations(), 1);
  EXPECT_EQ(res.trace.records[0].stop_residual, 0.0);
}

TEST(PdhgFixedTest, AssignmentNTwoReachesOptimum) {
  const AssignmentInstance inst = BuildInstance(2, 17);
  FixedStepConfig cfg;
  cfg.r = 10.0 / 2;
  cfg.s = 0.4 * 2;
  const SolveResult res =
      SolvePdhgFixed(MakeSaddleProblem(inst), InitialIterate(2), cfg);
  ASSERT_TRUE(res.trace.converged);
  EXPECT_NEAR(*res.trace.records.back().objective,
              HungarianOptimum(inst).objective, 1e-6);
}

// On the 1-D rotation with r = s = 1 one step maps (x, y) to (x + y, -x):
// the matrix [[1, 1], [-1, 0]] has both eigenvalues on the unit circle and
// order 6, and it conserves x^2 + x y + y^2.
TEST(PdhgFixedTest, RotationToyCyclesWithoutConverging) {
  FixedStepConfig cfg;
  cfg.max_iters = 100;
  cfg.store_iterates = true;
  const Iterate w0{{1.0}, {1.0}};
  const SolveResult res = SolvePdhgFixed(RotationToy(), w0, cfg);
  EXPECT_FALSE(res.trace.converged);
  EXPECT_EQ(res.trace.reason, TerminationReason::kMaxIterations);
  EXPECT_EQ(res.trace.iterations(), 100);
  ASSERT_EQ(res.trace.iterates.size(), 101u);
  for (std::size_t k = 0; k < res.trace.iterates.size(); ++k) {
    const Iterate& w = res.trace.iterates[k];
    const double x = w.x[0];
    const double y = w.y[0];
    EXPECT_DOUBLE_EQ(x * x + x * y + y * y, 3.0);
    // Direct power of the iteration matrix.
    const Iterate& want = res.trace.iterates[k % 6];
    EXPECT_EQ(w, want);
  }
  EXPECT_EQ(res.trace.iterates[3], (Iterate{{-1.0}, {-1.0}}));
  // Norm is bounded but not monotone: sqrt(2), sqrt(5), sqrt(5), sqrt(2), ...
  EXPECT_DOUBLE_EQ(res.trace.records[0].iterate_norm, std::sqrt(5.0));
  EXPECT_DOUBLE_EQ(res.trace.records[2].iterate_norm, std::sqrt(2.0));
  EXPECT_NEAR(res.trace.norm_growth(), std::sqrt(5.0 / 2.0), 1e-15);
}

TEST(PdhgFixedTest, BlowupCarriesIteration) {
  SaddleProblem p = RotationToy();
  p.primal_prox = [](std::span<const double> x0, std::span<const double>,
                     double) { return Vector{x0[0] * 1e200}; };
  FixedStepConfig cfg;
  cfg.max_iters = 10;
  try {
    SolvePdhgFixed(p, {{1.0}, {1.0}}, cfg);
    FAIL();
  } catch (const SolverError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNumericalBlowup);
    ASSERT_TRUE(e.iteration().has_value());
    EXPECT_EQ(*e.iteration(), 2);
  }
}

TEST(ChambollePockTest, BoundaryRejectedWhenEnforced) {
  FixedStepConfig cfg;
  cfg.r = 2.0;
  cfg.s = 4.0;
  try {
    SolveChambollePock(MakeSaddleProblem(BuildInstance(4, 1)),
                       InitialIterate(4), cfg, 8.0);
    FAIL();
  } catch (const SolverError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidConfiguration);
    const std::string msg = e.what();
    EXPECT_NE(msg.find("r*s"), std::string::npos);
    EXPECT_NE(msg.find("rho(A^T A)"), std::string::npos);
  }
  cfg.enforce_cp_condition = false;
  cfg.max_iters = 5;
  EXPECT_NO_THROW(SolveChambollePock(MakeSaddleProblem(BuildInstance(4, 1)),
                                     InitialIterate(4), cfg, 8.0));
}

TEST(ChambollePockTest, ZeroProblemConvergesInOneStep) {
  const Iterate w0{{1.0, 2.0}, {3.0}};
  const SolveResult res =
      SolveChambollePock(ZeroProblem(2, 1), w0, FixedStepConfig{}, 0.0);
  EXPECT_EQ(res.trace.iterations(), 1);
  EXPECT_EQ(res.solution, w0);
}

TEST(ChambollePockTest, PresetAtNHundredMatchesOracle) {
  const AssignmentInstance inst = BuildInstance(100, 1);
  const SolveResult res =
      SolveChambollePock(MakeSaddleProblem(inst), InitialIterate(100),
                         ChambollePockPreset(100), 200.0);
  ASSERT_TRUE(res.trace.converged);
  EXPECT_NEAR(*res.trace.records.back().objective,
              HungarianOptimum(inst).objective, 1e-6);
}

// ||w - w*||_M with M = [[r I, A^T], [A, s I]] never increases when
// r s > rho(A^T A).
TEST(ChambollePockTest, NormToReferenceIsMonotone) {
  const int n = 12;
  const AssignmentInstance inst = BuildInstance(n, 4);
  const SaddleProblem p = MakeSaddleProblem(inst);
  FixedStepConfig ref_cfg = ChambollePockPreset(n);
  ref_cfg.r *= 1.2;
  ref_cfg.s *= 1.2;
  ref_cfg.rel_tol = 1e-15;
  ref_cfg.abs_tol = 1e-14;
  const Iterate w_star = SolveChambollePock(p, InitialIterate(n), ref_cfg,
                                            2.0 * n).solution;
  FixedStepConfig cfg = ref_cfg;
  cfg.rel_tol = 1e-10;
  cfg.abs_tol = 0.0;
  cfg.store_iterates = true;
  const SolveResult res = SolveChambollePock(p, InitialIterate(n), cfg, 2.0 * n);
  ASSERT_TRUE(res.trace.converged);
  const LinearCoupling a = AssignmentOperator(n);
  auto dist = [&](const Iterate& w) {
    const Iterate d = Subtract(w, w_star);
    return cfg.r * SquaredNorm(d.x) + 2.0 * Dot(d.y, a.Apply(d.x)) +
           cfg.s * SquaredNorm(d.y);
  };
  double prev = dist(res.trace.iterates[0]);
  for (std::size_t k = 1; k < res.trace.iterates.size(); ++k) {
    const double cur = dist(res.trace.iterates[k]);
    ASSERT_LE(cur, prev + 1e-10) << "iteration " << k;
    prev = cur;
  }
}

TEST(StopRuleTest, RecordedResidualMatchesStoredIterates) {
  const AssignmentInstance inst = BuildInstance(10, 2);
  FixedStepConfig cfg = HeuristicPdaPreset(10);
  cfg.store_iterates = true;
  const SolveResult res =
      SolvePdhgFixed(MakeSaddleProblem(inst), InitialIterate(10), cfg);
  ASSERT_TRUE(res.trace.converged);
  const int total = res.trace.iterations();
  SplitMix64 rng(8);
  for (int i = 0; i < 10; ++i) {
    const int k = 1 + static_cast<int>(rng.Next() % total);
    const Iterate& next = res.trace.iterates[k];
    const Iterate& prev = res.trace.iterates[k - 1];
    const double want = testing::Stack(Subtract(next, prev)).norm() /
                        testing::Stack(next).norm();
    EXPECT_NEAR(res.trace.records[k - 1].stop_residual, want, 1e-14 * want);
  }
  EXPECT_LT(res.trace.records.back().stop_residual, 1e-10);
}

TEST(StopRuleTest, ZeroOverZeroAndAbsoluteFloor) {
  const Iterate z{{0.0}, {0.0}};
  EXPECT_EQ(StopResidual(z, z), 0.0);
  EXPECT_TRUE(std::isinf(StopResidual(z, {{1.0}, {0.0}})));
  EXPECT_FALSE(StopSatisfied({{1e-12}, {0.0}}, {{2e-12}, {0.0}}, 1.0, 1e-10,
                             0.0));
  EXPECT_TRUE(StopSatisfied({{1e-12}, {0.0}}, {{2e-12}, {0.0}}, 1.0, 1e-10,
                            1e-11));
}

}  // namespace
}  // namespace apdhg
