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

#include "opabs/hermitian.hpp"

#include <cmath>
#include <algorithm>
#include <limits>

#include <gtest/gtest.h>

#include "opabs/generators.hpp"
#include "oracles.hpp"

namespace opabs {
namespace {

using M = ComplexMatrix;
using testing::dist;
constexpr double kEps = std::numeric_limits<double>::epsilon();

M reconstruct(const HermitianEigen& e) {
  const M& u = e.eigenvectors;
  return u * ComplexMatrix::diagonal(std::span<const double>(e.eigenvalues)) * adjoint(u);
}

TEST(HermitianEigenTest, DiagonalInput) {
  const HermitianEigen e = hermitian_eigen(testing::diag2(3, 1));
  EXPECT_EQ(e.eigenvalues, (std::vector<double>{1, 3}));
  EXPECT_EQ(e.eigenvectors, M::from_rows({{0, 1}, {1, 0}}));
}

TEST(HermitianEigenTest, GoldenRatioPair) {
  const HermitianEigen e = hermitian_eigen(M::from_rows({{1, 1}, {1, 2}}));
  EXPECT_NEAR(e.eigenvalues[0], (3 - std::sqrt(5.0)) / 2, 4 * kEps);
  EXPECT_NEAR(e.eigenvalues[1], (3 + std::sqrt(5.0)) / 2, 4 * kEps);
}

TEST(HermitianEigenTest, RankOne) {
  const HermitianEigen e = hermitian_eigen(M::from_rows({{2, -2}, {-2, 2}}));
  EXPECT_NEAR(e.eigenvalues[0], 0.0, 1e-15);
  EXPECT_NEAR(e.eigenvalues[1], 4.0, 1e-15);
}

TEST(HermitianEigenTest, MatchesClosedFormOn2x2) {
  for (std::uint64_t t = 0; t < 200; ++t) {
    Rng rng(Seed{7, "eig2", t});
    const M h = gen_self_adjoint(2, rng);
    const auto expected = testing::eig2(h);
    const HermitianEigen e = hermitian_eigen(h);
    const double scale = std::max(1.0, frobenius_norm(h));
    EXPECT_NEAR(e.eigenvalues[0], expected[0], 16 * kEps * scale);
    EXPECT_NEAR(e.eigenvalues[1], expected[1], 16 * kEps * scale);
  }
}

TEST(HermitianEigenTest, RejectsNonSelfAdjoint) {
  try {
    hermitian_eigen(M::from_rows({{0, 1}, {0, 0}}));
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NEAR(e.witness(), std::sqrt(2.0), 1e-15);
  }
}

TEST(HermitianEigenTest, Deterministic) {
  Rng rng(Seed{8, "det", 0});
  const M h = gen_self_adjoint(6, rng);
  const HermitianEigen a = hermitian_eigen(h);
  const HermitianEigen b = hermitian_eigen(h);
  EXPECT_EQ(a.eigenvalues, b.eigenvalues);
  EXPECT_EQ(a.eigenvectors, b.eigenvectors);
}

// Reconstruction and unitarity bounds over 500 matrices per n in 2..16.
TEST(HermitianEigenTest, InvariantsOnRandomInputs) {
  for (std::size_t n = 2; n <= 16; ++n) {
    const double nd = static_cast<double>(n);
    for (std::uint64_t t = 0; t < 500; ++t) {
      Rng rng(Seed{9, "eig-invariants:" + std::to_string(n), t});
      const M h = gen_self_adjoint(n, rng);
      const HermitianEigen e = hermitian_eigen(h);
      ASSERT_TRUE(std::is_sorted(e.eigenvalues.begin(), e.eigenvalues.end()));
      const M& u = e.eigenvectors;
      ASSERT_LE(dist(u * adjoint(u), M::identity(n)), 64 * nd * kEps * std::sqrt(nd))
          << "n=" << n << " t=" << t;
      ASSERT_LE(dist(reconstruct(e), h), 64 * nd * kEps * frobenius_norm(h))
          << "n=" << n << " t=" << t;
    }
  }
}

TEST(SpectralSynthesisTest, ExactlySelfAdjoint) {
  const M u = gen_unitary(5, Seed{10, "synth", 0});
  const std::vector<double> values{-1, 0, 0.5, 2, 3};
  const M h = spectral_synthesis(u, values);
  EXPECT_EQ(h, adjoint(h));
  EXPECT_THROW(spectral_synthesis(u, std::vector<double>{1, 2}), DimensionMismatch);
}

}  // namespace
}  // namespace opabs
