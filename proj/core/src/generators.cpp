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

#include "opabs/generators.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "opabs/hermitian.hpp"

namespace opabs {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Complex draw_eigenvalue(Rng& rng, DiagonalLaw law, double scale) {
  switch (law) {
    case DiagonalLaw::kDisk: {
      const double r = scale * std::sqrt(rng.uniform(0.0, 1.0));
      return std::polar(r, rng.uniform(0.0, 2.0 * std::numbers::pi));
    }
    case DiagonalLaw::kAnnulus: {
      const double outer = std::max(scale, 0.1);
      const double r = std::sqrt(rng.uniform(0.01, outer * outer));
      return std::polar(r, rng.uniform(0.0, 2.0 * std::numbers::pi));
    }
    case DiagonalLaw::kReal:
      return rng.uniform(-scale, scale);
  }
  return 0.0;
}

// U diag(d) U* for complex d.
ComplexMatrix conjugate_diagonal(const ComplexMatrix& u, std::span<const Complex> d) {
  const std::size_t n = u.dim();
  std::vector<Complex> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) sum += u(i, k) * d[k] * std::conj(u(j, k));
      out[i * n + j] = sum;
    }
  }
  return ComplexMatrix(n, std::move(out));
}

// Householder QR of z; returns Q * diag(phase(R_kk)).
ComplexMatrix haar_from_gaussian(std::size_t n, std::vector<Complex> r) {
  std::vector<Complex> q(n * n);
  for (std::size_t i = 0; i < n; ++i) q[i * n + i] = 1.0;
  std::vector<Complex> v(n);

  for (std::size_t k = 0; k + 1 < n; ++k) {
    double normx = 0.0;
    for (std::size_t i = k; i < n; ++i) normx += std::norm(r[i * n + k]);
    normx = std::sqrt(normx);
    if (normx == 0.0) continue;
    const Complex x0 = r[k * n + k];
    const Complex phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : Complex{1.0};
    const Complex alpha = -phase * normx;

    double vnorm = 0.0;
    for (std::size_t i = k; i < n; ++i) {
      v[i] = r[i * n + k] - (i == k ? alpha : Complex{});
      vnorm += std::norm(v[i]);
    }
    vnorm = std::sqrt(vnorm);
    if (vnorm == 0.0) continue;
    for (std::size_t i = k; i < n; ++i) v[i] /= vnorm;

    for (std::size_t j = k; j < n; ++j) {
      Complex w = 0.0;
      for (std::size_t i = k; i < n; ++i) w += std::conj(v[i]) * r[i * n + j];
      for (std::size_t i = k; i < n; ++i) r[i * n + j] -= 2.0 * v[i] * w;
    }
    for (std::size_t row = 0; row < n; ++row) {
      Complex w = 0.0;
      for (std::size_t i = k; i < n; ++i) w += q[row * n + i] * v[i];
      for (std::size_t i = k; i < n; ++i) q[row * n + i] -= 2.0 * w * std::conj(v[i]);
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex rkk = r[k * n + k];
    const Complex phase = std::abs(rkk) > 0.0 ? rkk / std::abs(rkk) : Complex{1.0};
    for (std::size_t row = 0; row < n; ++row) q[row * n + k] *= phase;
  }
  return ComplexMatrix(n, std::move(q));
}

// Pauli expansion u.sigma for a real 3-vector u.
ComplexMatrix pauli(const std::array<double, 3>& u) {
  return ComplexMatrix::from_rows({{u[2], Complex{u[0], -u[1]}},
                                   {Complex{u[0], u[1]}, -u[2]}});
}

std::array<double, 3> unit_vector(Rng& rng) {
  std::array<double, 3> u{};
  double norm = 0.0;
  while (norm < 1e-3) {
    for (double& x : u) x = rng.gaussian();
    norm = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
  }
  for (double& x : u) x /= norm;
  return u;
}

double signed_magnitude(Rng& rng, double lo, double hi) {
  const double m = rng.uniform(lo, hi);
  return rng.coin() ? m : -m;
}

}  // namespace

std::uint64_t Seed::child() const {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ fnv1a64(claim_tag));
  return splitmix64(h ^ trial);
}

double Rng::gaussian() { return normal_(engine_); }

Complex Rng::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return Complex{re, im} * (1.0 / std::numbers::sqrt2);
}

double Rng::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

bool Rng::coin() { return std::bernoulli_distribution(0.5)(engine_); }

std::size_t Rng::index(std::size_t count) {
  if (count == 0) throw std::invalid_argument("Rng::index: empty range");
  return std::uniform_int_distribution<std::size_t>(0, count - 1)(engine_);
}

std::string to_string(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::kUnitary: return "unitary";
    case EnsembleKind::kSelfAdjoint: return "self_adjoint";
    case EnsembleKind::kAntiSymmetric: return "anti_symmetric";
    case EnsembleKind::kNormal: return "normal";
    case EnsembleKind::kCommutingNormalFamily: return "commuting_normal_family";
    case EnsembleKind::kCommutingFamilyWithGeneral: return "commuting_family_with_general";
    case EnsembleKind::kCommutingPositivePair: return "commuting_positive_pair";
    case EnsembleKind::kSaPairNormalProduct: return "sa_pair_normal_product";
    case EnsembleKind::kNegativeCrossPair: return "negative_cross_pair";
    case EnsembleKind::kOrderedPsdPair: return "ordered_psd_pair";
    case EnsembleKind::kSandwichPair: return "sandwich_pair";
    case EnsembleKind::kGeneral: return "general";
    case EnsembleKind::kRegistry: return "registry";
  }
  return "unknown";
}

void EnsembleSpec::validate() const {
  const bool family = kind == EnsembleKind::kCommutingNormalFamily ||
                      kind == EnsembleKind::kCommutingFamilyWithGeneral;
  if (family && k < 2) {
    throw std::invalid_argument("family ensembles require k >= 2");
  }
  if (!(scale >= 0.0)) throw std::invalid_argument("ensemble scale must be >= 0");
  if (fixed_dim && *fixed_dim == 0) throw std::invalid_argument("dim must be >= 1");
}

ComplexMatrix gen_unitary(std::size_t n, Rng& rng) {
  if (n == 0) throw std::invalid_argument("gen_unitary: n must be >= 1");
  std::vector<Complex> z(n * n);
  for (Complex& x : z) x = rng.complex_gaussian();
  return haar_from_gaussian(n, std::move(z));
}

ComplexMatrix gen_unitary(std::size_t n, const Seed& seed) {
  Rng rng(seed);
  return gen_unitary(n, rng);
}

ComplexMatrix gen_orthogonal(std::size_t n, Rng& rng) {
  if (n == 0) throw std::invalid_argument("gen_orthogonal: n must be >= 1");
  std::vector<Complex> z(n * n);
  for (Complex& x : z) x = rng.gaussian();
  return haar_from_gaussian(n, std::move(z));
}

std::vector<ComplexMatrix> gen_commuting_normal_family(std::size_t n, std::size_t k,
                                                       Rng& rng, DiagonalLaw law,
                                                       double scale) {
  if (n == 0 || k == 0) {
    throw std::invalid_argument("gen_commuting_normal_family: n, k must be >= 1");
  }
  const ComplexMatrix u = gen_unitary(n, rng);
  std::vector<ComplexMatrix> family;
  family.reserve(k);
  std::vector<Complex> d(n);
  for (std::size_t i = 0; i < k; ++i) {
    for (Complex& x : d) x = draw_eigenvalue(rng, law, scale);
    if (law == DiagonalLaw::kReal) {
      std::vector<double> re(n);
      for (std::size_t j = 0; j < n; ++j) re[j] = d[j].real();
      family.push_back(spectral_synthesis(u, re));
    } else {
      family.push_back(conjugate_diagonal(u, d));
    }
  }
  return family;
}

std::vector<ComplexMatrix> gen_commuting_normal_family(std::size_t n, std::size_t k,
                                                       const Seed& seed,
                                                       DiagonalLaw law, double scale) {
  Rng rng(seed);
  return gen_commuting_normal_family(n, k, rng, law, scale);
}

std::vector<ComplexMatrix> gen_commuting_family_with_general(
    std::size_t n, std::size_t k, std::size_t general_index, Rng& rng,
    DiagonalLaw law, double scale) {
  if (n == 0 || k == 0 || general_index >= k) {
    throw std::invalid_argument("gen_commuting_family_with_general: bad arguments");
  }
  const ComplexMatrix u = gen_unitary(n, rng);
  const std::size_t m = std::min<std::size_t>(n, 2);
  std::vector<ComplexMatrix> family;
  family.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (i != general_index) {
      std::vector<Complex> d(n);
      const Complex mu = draw_eigenvalue(rng, law, scale);
      for (std::size_t j = 0; j < n; ++j) {
        d[j] = j < m ? mu : draw_eigenvalue(rng, law, scale);
      }
      family.push_back(conjugate_diagonal(u, d));
      continue;
    }
    // Upper-triangular block with a nonzero strict part, rotated inside the
    // shared eigenspace, then the remaining diagonal.
    std::vector<Complex> t(m * m);
    for (std::size_t r = 0; r < m; ++r) {
      t[r * m + r] = draw_eigenvalue(rng, law, scale);
      for (std::size_t c = r + 1; c < m; ++c) {
        Complex x = rng.complex_gaussian();
        // keep the block away from normal
        if (std::abs(x) < 0.25) x = 0.25 * (std::abs(x) > 0.0 ? x / std::abs(x) : Complex{1.0});
        t[r * m + c] = scale * x;
      }
    }
    const ComplexMatrix q = gen_unitary(m, rng);
    const ComplexMatrix block = q * ComplexMatrix(m, std::move(t)) * adjoint(q);
    std::vector<Complex> full(n * n);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) full[r * n + c] = block(r, c);
    }
    for (std::size_t j = m; j < n; ++j) full[j * n + j] = draw_eigenvalue(rng, law, scale);
    family.push_back(u * ComplexMatrix(n, std::move(full)) * adjoint(u));
  }
  return family;
}

std::pair<ComplexMatrix, ComplexMatrix> gen_commuting_positive_pair(std::size_t n,
                                                                    Rng& rng,
                                                                    double scale) {
  const ComplexMatrix u = gen_unitary(n, rng);
  std::vector<double> a(n), b(n);
  for (double& x : a) x = rng.uniform(0.0, scale);
  for (double& x : b) x = rng.uniform(0.0, scale);
  return {spectral_synthesis(u, a), spectral_synthesis(u, b)};
}

std::pair<ComplexMatrix, ComplexMatrix> gen_sa_pair_normal_product(Rng& rng,
                                                                   SaPairKind kind) {
  switch (kind) {
    case SaPairKind::kAnticommuting: {
      const std::array<double, 3> u = unit_vector(rng);
      std::array<double, 3> v = unit_vector(rng);
      // Gram-Schmidt v against u; redraw on near-parallel draws.
      for (;;) {
        const double dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
        for (int i = 0; i < 3; ++i) v[i] -= dot * u[i];
        const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        if (norm > 1e-3) {
          for (double& x : v) x /= norm;
          break;
        }
        v = unit_vector(rng);
      }
      const double a = signed_magnitude(rng, 0.5, 2.0);
      const double b = signed_magnitude(rng, 0.5, 2.0);
      return {scale(pauli(u), a), scale(pauli(v), b)};
    }
    case SaPairKind::kCommutingIndefinite:
    case SaPairKind::kCommutingPositive: {
      const ComplexMatrix v = gen_orthogonal(2, rng);
      const double lo = kind == SaPairKind::kCommutingPositive ? 0.0 : -2.0;
      const std::array<double, 2> a{rng.uniform(lo, 2.0), rng.uniform(lo, 2.0)};
      const std::array<double, 2> b{rng.uniform(lo, 2.0), rng.uniform(lo, 2.0)};
      return {spectral_synthesis(v, a), spectral_synthesis(v, b)};
    }
  }
  throw std::invalid_argument("gen_sa_pair_normal_product: unknown kind");
}

std::pair<ComplexMatrix, ComplexMatrix> gen_negative_cross_pair(std::size_t n,
                                                                Rng& rng) {
  const ComplexMatrix u = gen_unitary(n, rng);
  std::vector<Complex> lambda(n), mu(n);
  for (std::size_t i = 0; i < n; ++i) {
    lambda[i] = draw_eigenvalue(rng, DiagonalLaw::kDisk, 1.0);
    const Complex c = std::polar(rng.uniform(0.0, 2.0),
                                 rng.uniform(0.5, 1.5) * std::numbers::pi);
    mu[i] = c * lambda[i];
  }
  return {conjugate_diagonal(u, lambda), conjugate_diagonal(u, mu)};
}

std::pair<ComplexMatrix, ComplexMatrix> gen_ordered_psd_pair(std::size_t n, Rng& rng,
                                                             bool commuting) {
  if (!commuting) {
    const ComplexMatrix g = gen_general(n, rng);
    const ComplexMatrix h = gen_general(n, rng);
    ComplexMatrix b = adjoint(g) * g;
    ComplexMatrix a = b + adjoint(h) * h;
    return {std::move(a), std::move(b)};
  }
  const ComplexMatrix u = gen_unitary(n, rng);
  std::vector<double> lower(n), upper(n);
  for (std::size_t i = 0; i < n; ++i) {
    lower[i] = rng.uniform(0.0, 2.0);
    upper[i] = lower[i] + rng.uniform(0.0, 2.0);
  }
  return {spectral_synthesis(u, upper), spectral_synthesis(u, lower)};
}

std::pair<ComplexMatrix, ComplexMatrix> gen_sandwich_pair(std::size_t n, Rng& rng) {
  const ComplexMatrix w = gen_general(n, rng);
  const ComplexMatrix v = gen_unitary(n, rng);
  std::vector<double> c(n);
  for (double& x : c) x = rng.uniform(-1.0, 1.0);
  const ComplexMatrix contraction = spectral_synthesis(v, c);
  ComplexMatrix s = w * adjoint(w);
  ComplexMatrix t = hermitian_part(w * contraction * adjoint(w));
  return {std::move(s), std::move(t)};
}

ComplexMatrix gen_self_adjoint(std::size_t n, Rng& rng) {
  return hermitian_part(gen_general(n, rng));
}

ComplexMatrix gen_anti_symmetric(std::size_t n, Rng& rng) {
  return scale(gen_self_adjoint(n, rng), Complex{0.0, 1.0});
}

ComplexMatrix gen_general(std::size_t n, Rng& rng, double scale) {
  if (n == 0) throw std::invalid_argument("gen_general: n must be >= 1");
  std::vector<Complex> z(n * n);
  for (Complex& x : z) x = scale * rng.complex_gaussian();
  return ComplexMatrix(n, std::move(z));
}

ComplexMatrix gen_general(std::size_t n, const Seed& seed, double scale) {
  Rng rng(seed);
  return gen_general(n, rng, scale);
}

std::vector<ComplexMatrix> sample(const EnsembleSpec& spec, std::size_t n, Rng& rng) {
  spec.validate();
  if (spec.fixed_dim) n = *spec.fixed_dim;
  auto pair = [](std::pair<ComplexMatrix, ComplexMatrix> p) {
    return std::vector<ComplexMatrix>{std::move(p.first), std::move(p.second)};
  };
  switch (spec.kind) {
    case EnsembleKind::kUnitary:
      return {gen_unitary(n, rng)};
    case EnsembleKind::kSelfAdjoint:
      return {gen_self_adjoint(n, rng)};
    case EnsembleKind::kAntiSymmetric:
      return {gen_anti_symmetric(n, rng)};
    case EnsembleKind::kNormal:
      return gen_commuting_normal_family(n, 1, rng, spec.law, spec.scale);
    case EnsembleKind::kCommutingNormalFamily:
      return gen_commuting_normal_family(n, spec.k, rng, spec.law, spec.scale);
    case EnsembleKind::kCommutingFamilyWithGeneral: {
      const std::size_t g = rng.index(spec.k);
      return gen_commuting_family_with_general(n, spec.k, g, rng, spec.law, spec.scale);
    }
    case EnsembleKind::kCommutingPositivePair:
      return pair(gen_commuting_positive_pair(n, rng, spec.scale));
    case EnsembleKind::kSaPairNormalProduct:
      return pair(gen_sa_pair_normal_product(rng));
    case EnsembleKind::kNegativeCrossPair:
      return pair(gen_negative_cross_pair(n, rng));
    case EnsembleKind::kOrderedPsdPair:
      return pair(gen_ordered_psd_pair(n, rng, spec.commuting));
    case EnsembleKind::kSandwichPair:
      return pair(gen_sandwich_pair(n, rng));
    case EnsembleKind::kGeneral: {
      std::vector<ComplexMatrix> out;
      for (std::size_t i = 0; i < std::max<std::size_t>(spec.k, 1); ++i) {
        out.push_back(gen_general(n, rng, spec.scale));
      }
      return out;
    }
    case EnsembleKind::kRegistry:
      break;
  }
  throw std::invalid_argument("sample: ensemble " + to_string(spec.kind) +
                              " cannot be sampled");
}

}  // namespace opabs
