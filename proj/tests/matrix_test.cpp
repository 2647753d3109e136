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

#include "opabs/matrix.hpp"

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "opabs/generators.hpp"
#include "opabs/hermitian.hpp"
#include "opabs/matrix_json.hpp"
#include "oracles.hpp"

namespace opabs {
namespace {

using M = ComplexMatrix;
using testing::diag2;
using testing::dist;
constexpr double kEps = std::numeric_limits<double>::epsilon();
const Complex kI{0.0, 1.0};

TEST(ComplexMatrixTest, RejectsBadShapes) {
  EXPECT_THROW(M(2, std::vector<Complex>(3)), std::invalid_argument);
  EXPECT_THROW(M(0, {}), std::invalid_argument);
  EXPECT_THROW(M::from_rows({{1, 2}, {3}}), std::invalid_argument);
}

TEST(ComplexMatrixTest, RejectsNonFinite) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_THROW(M(1, {Complex(nan, 0)}), std::invalid_argument);
  EXPECT_THROW(M(1, {Complex(0, inf)}), std::invalid_argument);
}

TEST(AdjointTest, Examples) {
  EXPECT_EQ(adjoint(M::identity(2)), M::identity(2));
  EXPECT_EQ(adjoint(M::from_rows({{0, 1}, {2, 0}})), M::from_rows({{0, 2}, {1, 0}}));
  EXPECT_EQ(adjoint(M::from_rows({{kI}})), M::from_rows({{-kI}}));
}

TEST(AdjointTest, InvolutionAndAntiMultiplicative) {
  for (std::size_t n : {1u, 2u, 3u, 5u, 8u}) {
    for (std::uint64_t t = 0; t < 50; ++t) {
      Rng rng(Seed{1, "adjoint", t * 16 + n});
      const M a = gen_general(n, rng);
      const M b = gen_general(n, rng);
      EXPECT_EQ(adjoint(adjoint(a)), a);
      const double bound = 8.0 * n * kEps * frobenius_norm(a) * frobenius_norm(b);
      EXPECT_LE(dist(adjoint(a * b), adjoint(b) * adjoint(a)), bound);
    }
  }
}

TEST(MultiplyTest, Examples) {
  const M a = M::from_rows({{1, 1}, {0, 1}});
  const M b = M::from_rows({{0, 1}, {0, 0}});
  EXPECT_EQ(a * b, M::from_rows({{0, 1}, {0, 0}}));
  EXPECT_EQ(b * a, M::from_rows({{0, 1}, {0, 0}}));
  EXPECT_EQ(M::from_rows({{0, 1}, {2, 0}}) * M::from_rows({{0, 2}, {1, 0}}), diag2(1, 4));
  EXPECT_EQ(a * M::identity(2), a);
}

TEST(MultiplyTest, MatchesNaiveProduct) {
  for (std::uint64_t t = 0; t < 20; ++t) {
    Rng rng(Seed{2, "multiply", t});
    const M a = gen_general(6, rng);
    const M b = gen_general(6, rng);
    EXPECT_LE(dist(a * b, testing::naive_product(a, b)),
              32 * kEps * frobenius_norm(a) * frobenius_norm(b));
  }
}

TEST(MultiplyTest, DimensionMismatch) {
  EXPECT_THROW(M::identity(2) * M::identity(3), DimensionMismatch);
  EXPECT_THROW(M::identity(2) + M::identity(3), DimensionMismatch);
}

TEST(OperatorNormTest, Examples) {
  EXPECT_NEAR(operator_norm(diag2(2, -1)), 2.0, 1e-15);
  EXPECT_NEAR(operator_norm(M::from_rows({{0, 1}, {0, 0}})), 1.0, 1e-15);
  EXPECT_EQ(operator_norm(M::zero(3)), 0.0);
}

TEST(OperatorNormTest, AgreesWithPowerIteration) {
  for (std::size_t n : {2u, 3u, 5u}) {
    for (std::uint64_t t = 0; t < 10; ++t) {
      const M a = gen_general(n, Seed{3, "opnorm", t * 8 + n});
      const double expected = testing::power_norm(a);
      EXPECT_NEAR(operator_norm(a), expected, 1e-6 * expected);
    }
  }
}

TEST(OperatorNormTest, UnitariesHaveNormOne) {
  for (std::size_t n : {1u, 2u, 4u, 8u}) {
    for (std::uint64_t t = 0; t < 25; ++t) {
      EXPECT_NEAR(operator_norm(gen_unitary(n, Seed{4, "unitary", t})), 1.0, 1e-10);
    }
  }
}

TEST(ApproxEqualTest, ScalesWithLargerOperand) {
  const TolerancePolicy pol;
  const M big = scale(M::identity(2), 1e6);
  EXPECT_TRUE(approx_equal(big, big + scale(M::identity(2), 1e-4), pol));
  EXPECT_FALSE(approx_equal(big, big + scale(M::identity(2), 1e-2), pol));
  EXPECT_TRUE(approx_equal(M::zero(2), scale(M::identity(2), 5e-13), pol));
  EXPECT_FALSE(approx_equal(M::zero(2), scale(M::identity(2), 1e-8), pol));
}

TEST(TolerancePolicyTest, Validate) {
  EXPECT_NO_THROW(TolerancePolicy{}.validate());
  EXPECT_THROW((TolerancePolicy{0.0, 1e-12}.validate()), std::invalid_argument);
  EXPECT_THROW((TolerancePolicy{1e-9, -1.0}.validate()), std::invalid_argument);
}

TEST(PartsTest, RealAndImaginaryPartsRecombine) {
  const M t = gen_general(4, Seed{5, "parts", 0});
  const M re = hermitian_part(t);
  const M im = imaginary_part(t);
  EXPECT_EQ(re, adjoint(re));
  EXPECT_LE(dist(im, adjoint(im)), 1e-15);
  EXPECT_LE(dist(re + Complex(0, 1) * im, t), 1e-14);
}

TEST(MatrixJsonTest, RoundTrip) {
  const M a = gen_general(3, Seed{6, "json", 0});
  EXPECT_EQ(parse_matrix_json(to_matrix_json(a)), a);
}

TEST(MatrixJsonTest, ParsesLiteral) {
  const M m = parse_matrix_json(R"({"dim": 2, "entries": [[0,1],[1,0],[2,0],[0,-1]]})");
  EXPECT_EQ(m, M::from_rows({{kI, 1.0}, {2.0, -kI}}));
}

TEST(MatrixJsonTest, RejectsMalformed) {
  EXPECT_THROW(parse_matrix_json("{"), std::invalid_argument);
  EXPECT_THROW(parse_matrix_json(R"({"dim": 2, "entries": [[1,0]]})"), std::invalid_argument);
  EXPECT_THROW(parse_matrix_json(R"({"dim": 1, "entries": [[1]]})"), std::invalid_argument);
  EXPECT_THROW(parse_matrix_json(R"({"entries": [[1,0]]})"), std::invalid_argument);
}

}  // namespace
}  // namespace opabs
