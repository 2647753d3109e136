// Copyright 2026 The opabs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "opabs/predicates.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "opabs/claims.hpp"
#include "opabs/calculus.hpp"
#include "opabs/generators.hpp"
#include "oracles.hpp"

namespace opabs {
namespace {

using M = ComplexMatrix;
using testing::diag2;
const Complex kI{0.0, 1.0};

TEST(PredicatesTest, SelfAdjoint) {
  EXPECT_TRUE(is_self_adjoint(diag2(2, -1)));
  EXPECT_FALSE(is_self_adjoint(M::from_rows({{0, 1}, {0, 0}})));
  EXPECT_FALSE(is_self_adjoint(kI * M::identity(2)));
}

TEST(PredicatesTest, Normal) {
  EXPECT_TRUE(is_normal(gen_unitary(4, Seed{20, "u", 0})));
  EXPECT_FALSE(is_normal(M::from_rows({{0, 1}, {2, 0}})));
  const PredicateResult jordan = is_normal(M::from_rows({{1, 1}, {0, 1}}));
  EXPECT_FALSE(jordan);
  // Self-commutator diag(1,-1) has Frobenius norm sqrt(2).
  EXPECT_NEAR(jordan.residual, std::sqrt(2.0), 1e-15);
}

TEST(PredicatesTest, Hyponormal) {
  EXPECT_TRUE(is_hyponormal(gen_commuting_normal_family(3, 1, Seed{21, "n", 0})[0]));
  const PredicateResult shift = is_hyponormal(M::from_rows({{0, 1}, {0, 0}}));
  EXPECT_FALSE(shift);
  EXPECT_DOUBLE_EQ(shift.residual, -1.0);
  EXPECT_TRUE(is_hyponormal(M::from_rows({{kI, 0}, {0, 2}})));
}

TEST(PredicatesTest, Positive) {
  const M g = gen_general(4, Seed{22, "g", 0});
  EXPECT_TRUE(is_positive(adjoint(g) * g));
  EXPECT_FALSE(is_positive(diag2(2, -1)));
  EXPECT_TRUE(is_positive(M::zero(3)));
  EXPECT_FALSE(is_positive(M::from_rows({{1, 1}, {0, 1}})));
}

TEST(PredicatesTest, AntiSymmetric) {
  EXPECT_TRUE(is_anti_symmetric(M::from_rows({{0, 1}, {-1, 0}})));
  const M t = gen_general(3, Seed{23, "t", 0});
  EXPECT_TRUE(is_anti_symmetric(t - adjoint(t)));
  EXPECT_FALSE(is_anti_symmetric(M::identity(2)));
}

TEST(PredicatesTest, Commutes) {
  EXPECT_TRUE(commutes(M::from_rows({{1, 1}, {0, 1}}), M::from_rows({{0, 1}, {0, 0}})));
  EXPECT_FALSE(commutes(diag2(2, -1), M::from_rows({{0, 1}, {1, 0}})));
  const M a = gen_general(4, Seed{24, "a", 0});
  EXPECT_TRUE(commutes(a, a * a));
  EXPECT_THROW(commutes(M::identity(2), M::identity(3)), DimensionMismatch);
}

TEST(ClassifyTest, ImplicationChain) {
  auto check = [](const M& m) {
    const ClassReport r = classify(m);
    EXPECT_TRUE(!r.positive || r.self_adjoint);
    EXPECT_TRUE(!r.self_adjoint || r.normal);
    EXPECT_TRUE(!r.normal || r.hyponormal);
  };
  for (std::uint64_t t = 0; t < 200; ++t) {
    Rng rng(Seed{25, "classify", t});
    const std::size_t n = 2 + t % 5;
    check(gen_general(n, rng));
    check(gen_self_adjoint(n, rng));
    check(gen_anti_symmetric(n, rng));
    check(gen_commuting_normal_family(n, 1, rng)[0]);
    const auto [a, b] = gen_commuting_positive_pair(n, rng);
    check(a);
    check(b);
  }
  for (const RegistryEntry& e : registry()) {
    for (const M& m : e.instance.matrices) check(m);
  }
  const ClassReport p = classify(diag2(1, 2));
  EXPECT_TRUE(p.positive && p.self_adjoint && p.normal && p.hyponormal);
  EXPECT_FALSE(p.anti_symmetric);
}

// Hyponormal and normal agree on every random matrix (a positive
// self-commutator has zero trace, so it vanishes).
TEST(CollapseTest, HyponormalIffNormal) {
  for (std::size_t n = 2; n <= 8; ++n) {
    for (std::uint64_t t = 0; t < 200; ++t) {
      Rng rng(Seed{26, "collapse:" + std::to_string(n), t});
      const M a = t % 2 ? gen_general(n, rng) : gen_commuting_normal_family(n, 1, rng)[0];
      EXPECT_EQ(is_hyponormal(a).holds, is_normal(a).holds) << "n=" << n << " t=" << t;
    }
  }
}

TEST(FugledeTest, FourConditionsAgree) {
  std::size_t commuting = 0;
  for (std::uint64_t t = 0; t < 500; ++t) {
    Rng rng(Seed{27, "fuglede", t});
    const std::size_t n = 2 + t % 4;
    std::vector<M> pair = t % 2 ? gen_commuting_family_with_general(n, 2, 1, rng)
                                : std::vector<M>{gen_commuting_normal_family(n, 1, rng)[0],
                                                 gen_general(n, rng)};
    const M& a = pair[0];
    const M& b = pair[1];
    const bool c0 = commutes(a, b).holds;
    EXPECT_EQ(commutes(adjoint(a), b).holds, c0);
    EXPECT_EQ(commutes(a, adjoint(b)).holds, c0);
    EXPECT_EQ(commutes(adjoint(a), adjoint(b)).holds, c0);
    commuting += c0 ? 1 : 0;
  }
  EXPECT_EQ(commuting, 250u);
}

TEST(AntiSymmetricSquareTest, SquareIsNegative) {
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng(Seed{28, "anti", t});
    const M a = gen_anti_symmetric(2 + t % 6, rng);
    ASSERT_TRUE(is_anti_symmetric(a));
    EXPECT_TRUE(loewner_leq(a * a, M::zero(a.dim())).holds);
  }
}

}  // namespace
}  // namespace opabs
