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
#include <vector>

#include "apdhg/core.h"
#include "apdhg/random.h"
#include "apdhg/toy_problems.h"
#include "test_util.h"

namespace apdhg {
namespace {

using testing::RandomIterate;
using testing::RandomVector;

TEST(RandomTest, CounterBasedStreamIsReproducible) {
  SplitMix64 a(42);
  SplitMix64 b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.Next(), b.Next());
  SplitMix64 c(42);
  EXPECT_EQ(c.At(5), SplitMix64(42).At(5));
  for (int i = 0; i < 5; ++i) c.Next();
  EXPECT_EQ(c.Next(), SplitMix64(42).At(5));
}

TEST(RandomTest, KnownSplitMix64Output) {
  // Reference values of the published SplitMix64 generator from state 0.
  SplitMix64 rng(0);
  EXPECT_EQ(rng.Next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(rng.Next(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(rng.Next(), 0x06C45D188009454FULL);
}

TEST(RandomTest, OpenClosedUnitInterval) {
  SplitMix64 rng(7);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.NextOpenClosed();
    ASSERT_GT(u, 0.0);
    ASSERT_LE(u, 1.0);
  }
}

TEST(CouplingTest, DenseApplyAndAdjoint) {
  const LinearCoupling a = DenseCoupling(2, 3, {1, 2, 3, 4, 5, 6});
  EXPECT_EQ(a.Apply(std::vector<double>{1, 0, -1}), (Vector{-2, -2}));
  EXPECT_EQ(a.ApplyAdjoint(std::vector<double>{1, 1}), (Vector{5, 7, 9}));
}

TEST(CouplingTest, DimensionMismatchThrows) {
  const LinearCoupling a = DenseCoupling(2, 3, {1, 2, 3, 4, 5, 6});
  try {
    a.Apply(std::vector<double>{1, 2});
    FAIL();
  } catch (const SolverError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
  EXPECT_THROW(a.ApplyAdjoint(std::vector<double>{1, 2, 3}), SolverError);
  EXPECT_THROW(DenseCoupling(2, 2, {1, 2, 3}), SolverError);
}

TEST(CouplingTest, NegatedAdjointSwapsRoles) {
  SplitMix64 rng(3);
  const Vector entries = RandomDenseMatrix(4, 3, 11);
  const LinearCoupling a = DenseCoupling(4, 3, entries);
  const LinearCoupling b = a.NegatedAdjoint();
  EXPECT_EQ(b.n_primal(), 4u);
  EXPECT_EQ(b.m_dual(), 3u);
  const Vector y = RandomVector(4, rng);
  const Vector aty = a.ApplyAdjoint(y);
  const Vector by = b.Apply(y);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_DOUBLE_EQ(by[i], -aty[i]);
}

TEST(CoreTest, ApplyFOnRotationToy) {
  const SaddleProblem p = RotationToy();
  const Iterate f = ApplyF(p, {{2.0}, {3.0}});
  EXPECT_EQ(f.x, Vector{-3.0});
  EXPECT_EQ(f.y, Vector{2.0});
}

TEST(CoreTest, ApplyFRejectsWrongDimensions) {
  const SaddleProblem p = RandomBoxProblem(3, 2, 1);
  EXPECT_THROW(ApplyF(p, {{1.0}, {1.0, 1.0, 1.0}}), SolverError);
}

TEST(CoreTest, SkewSymmetryOfF) {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + rng.Next() % 6;
    const std::size_t n = 1 + rng.Next() % 6;
    const SaddleProblem p = RandomBoxProblem(m, n, rng.Next());
    const Iterate u = RandomIterate(n, m, rng);
    const Iterate v = RandomIterate(n, m, rng);
    const Iterate d = Subtract(u, v);
    const Iterate fd = Subtract(ApplyF(p, u), ApplyF(p, v));
    const double ip = Dot(d.x, fd.x) + Dot(d.y, fd.y);
    EXPECT_NEAR(ip, 0.0, 1e-12 * std::max(1.0, d.SquaredNorm()));
  }
}

TEST(CoreTest, AdjointIdentity) {
  SplitMix64 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + rng.Next() % 8;
    const std::size_t n = 1 + rng.Next() % 8;
    const LinearCoupling a = DenseCoupling(m, n, RandomDenseMatrix(m, n, trial));
    const Vector x = RandomVector(n, rng);
    const Vector y = RandomVector(m, rng);
    const double lhs = Dot(y, a.Apply(x));
    const double rhs = Dot(a.ApplyAdjoint(y), x);
    EXPECT_NEAR(lhs, rhs, 1e-12 * std::max(1.0, Norm(x) * Norm(y)));
  }
}

TEST(CoreTest, ViResidualZeroAtSaddleOfRotation) {
  const SaddleProblem p = RotationToy();
  SplitMix64 rng(9);
  std::vector<Iterate> samples;
  for (int i = 0; i < 50; ++i) samples.push_back(RandomIterate(1, 1, rng, -5, 5));
  EXPECT_EQ(ViResidual(p, {{0.0}, {0.0}}, samples), 0.0);
  // Away from the saddle some sample certifies a violation.
  EXPECT_GT(ViResidual(p, {{1.0}, {1.0}}, samples), 0.0);
}

TEST(CoreTest, ViResidualNeedsThetas) {
  SaddleProblem p = RotationToy();
  p.theta1 = nullptr;
  try {
    std::vector<Iterate> samples{{{0.0}, {0.0}}};
    ViResidual(p, {{0.0}, {0.0}}, samples);
    FAIL();
  } catch (const SolverError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedOperation);
  }
}

TEST(CoreTest, RoleSwappedTwinMapsSaddlePoints) {
  // F_twin(y, x) = (A x; -A^T y), the blocks of F(x, y) swapped.
  SplitMix64 rng(10);
  const SaddleProblem p = RandomBoxProblem(3, 4, 77);
  const SaddleProblem twin = RoleSwapped(p);
  EXPECT_EQ(twin.n(), 3u);
  EXPECT_EQ(twin.m(), 4u);
  const Iterate w = RandomIterate(4, 3, rng);
  const Iterate f = ApplyF(p, w);
  const Iterate ft = ApplyF(twin, Swapped(w));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(ft.x[i], f.y[i], 1e-15);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(ft.y[i], f.x[i], 1e-15);
  // Prox maps exchange.
  const Vector y0 = RandomVector(3, rng);
  EXPECT_EQ(twin.primal_prox(y0, w.x, 2.0), p.dual_prox(y0, w.x, 2.0));
  EXPECT_EQ(twin.dual_prox(w.x, y0, 3.0), p.primal_prox(w.x, y0, 3.0));
}

TEST(CoreTest, IterateHelpers) {
  Iterate w{{3.0}, {4.0}};
  EXPECT_DOUBLE_EQ(w.Norm(), 5.0);
  EXPECT_TRUE(w.AllFinite());
  EXPECT_FALSE(w.IsZero());
  w.x[0] = std::nan("");
  EXPECT_FALSE(w.AllFinite());
}

}  // namespace
}  // namespace apdhg
