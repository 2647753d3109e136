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

#ifndef OPABS_GENERATORS_HPP_
#define OPABS_GENERATORS_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "opabs/matrix.hpp"

namespace opabs {

/// Identifies one independent random stream: (master seed, claim tag,
/// trial index). The stream is a pure function of the triple.
struct Seed {
  std::uint64_t master = 0;
  std::string claim_tag;
  std::uint64_t trial = 0;

  /// 64-bit child seed derived from the triple.
  std::uint64_t child() const;

  friend bool operator==(const Seed&, const Seed&) = default;
};

/// Deterministic source of the draws used by every generator.
class Rng {
 public:
  explicit Rng(const Seed& seed) : engine_(seed.child()) {}
  explicit Rng(std::uint64_t raw) : engine_(raw) {}

  double gaussian();
  /// Circular complex Gaussian with E|z|^2 = 1.
  Complex complex_gaussian();
  double uniform(double lo, double hi);
  bool coin();
  std::size_t index(std::size_t count);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// How random eigenvalues of normal ensembles are drawn.
enum class DiagonalLaw {
  kDisk,     ///< uniform in |z| <= scale
  kAnnulus,  ///< uniform in 0.1 <= |z| <= scale (invertible)
  kReal,     ///< uniform in [-scale, scale] (self-adjoint)
};

enum class EnsembleKind {
  kUnitary,
  kSelfAdjoint,
  kAntiSymmetric,
  kNormal,
  kCommutingNormalFamily,
  kCommutingFamilyWithGeneral,
  kCommutingPositivePair,
  kSaPairNormalProduct,
  kNegativeCrossPair,
  kOrderedPsdPair,
  kSandwichPair,
  kGeneral,
  kRegistry,
};

std::string to_string(EnsembleKind kind);

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::kGeneral;
  /// Family size for the family kinds.
  std::size_t k = 1;
  double scale = 1.0;
  DiagonalLaw law = DiagonalLaw::kDisk;
  /// Only meaningful for kOrderedPsdPair.
  bool commuting = false;
  /// Dimension the ensemble is pinned to, if it cannot be sized freely.
  std::optional<std::size_t> fixed_dim;

  /// Throws std::invalid_argument if k < 2 for family kinds or scale < 0.
  void validate() const;
};

/// Haar-distributed unitary: Householder QR of a complex Gaussian matrix,
/// columns rephased so that R has a positive real diagonal.
ComplexMatrix gen_unitary(std::size_t n, Rng& rng);
ComplexMatrix gen_unitary(std::size_t n, const Seed& seed);

/// Random real orthogonal matrix (same construction on a real Gaussian).
ComplexMatrix gen_orthogonal(std::size_t n, Rng& rng);

/// A_i = U D_i U* with one shared Haar U and independent diagonals D_i.
std::vector<ComplexMatrix> gen_commuting_normal_family(
    std::size_t n, std::size_t k, Rng& rng,
    DiagonalLaw law = DiagonalLaw::kDisk, double scale = 1.0);
std::vector<ComplexMatrix> gen_commuting_normal_family(
    std::size_t n, std::size_t k, const Seed& seed,
    DiagonalLaw law = DiagonalLaw::kDisk, double scale = 1.0);

/// k pairwise commuting matrices, all normal except the one at
/// `general_index`. The normal members act as scalars on a leading
/// eigenspace block of size min(n, 2); the general member carries a
/// non-normal upper-triangular block there (eigenvalues drawn from
/// `law`), unitarily rotated, so it commutes with the rest without being
/// normal whenever n >= 2.
std::vector<ComplexMatrix> gen_commuting_family_with_general(
    std::size_t n, std::size_t k, std::size_t general_index, Rng& rng,
    DiagonalLaw law = DiagonalLaw::kDisk, double scale = 1.0);

/// (A, B) commuting and positive semidefinite, sharing an eigenbasis.
std::pair<ComplexMatrix, ComplexMatrix> gen_commuting_positive_pair(
    std::size_t n, Rng& rng, double scale = 1.0);

enum class SaPairKind {
  /// A = a (u.sigma), B = b (v.sigma), u perpendicular to v: AB is
  /// anti-Hermitian (normal, not self-adjoint) and AB != BA.
  kAnticommuting,
  /// Commuting self-adjoint pair with indefinite spectra.
  kCommutingIndefinite,
  /// Commuting positive semidefinite pair.
  kCommutingPositive,
};

/// Self-adjoint 2x2 pair whose product is normal.
std::pair<ComplexMatrix, ComplexMatrix> gen_sa_pair_normal_product(
    Rng& rng, SaPairKind kind = SaPairKind::kAnticommuting);

/// (A, B) with A normal, B = U diag(c_i lambda_i) U* sharing A's
/// eigenbasis and Re c_i <= 0, so A*B + B*A <= 0 and AB = BA.
std::pair<ComplexMatrix, ComplexMatrix> gen_negative_cross_pair(std::size_t n,
                                                                 Rng& rng);

/// (A, B) with A >= B >= 0. commuting=false: B = G*G, A = B + H*H.
/// commuting=true: both diagonal in one Haar basis.
std::pair<ComplexMatrix, ComplexMatrix> gen_ordered_psd_pair(std::size_t n,
                                                              Rng& rng,
                                                              bool commuting);

/// (S, T) with S = W W* and T = W C W*, C self-adjoint with spectrum in
/// [-1, 1], so that -S <= T <= S.
std::pair<ComplexMatrix, ComplexMatrix> gen_sandwich_pair(std::size_t n,
                                                           Rng& rng);

ComplexMatrix gen_self_adjoint(std::size_t n, Rng& rng);
ComplexMatrix gen_anti_symmetric(std::size_t n, Rng& rng);

/// Independent circular complex Gaussian entries times `scale`.
ComplexMatrix gen_general(std::size_t n, Rng& rng, double scale = 1.0);
ComplexMatrix gen_general(std::size_t n, const Seed& seed, double scale = 1.0);

/// Draws one tuple for `spec` at dimension n (spec.fixed_dim wins).
std::vector<ComplexMatrix> sample(const EnsembleSpec& spec, std::size_t n,
                                  Rng& rng);

}  // namespace opabs

#endif  // OPABS_GENERATORS_HPP_
