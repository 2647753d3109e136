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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace opabs {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

class Work {
 public:
  explicit Work(const ComplexMatrix& m)
      : n_(m.dim()), a_(m.entries().begin(), m.entries().end()) {}
  std::size_t n() const { return n_; }
  Complex& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  std::vector<Complex> release() && { return std::move(a_); }

 private:
  std::size_t n_;
  std::vector<Complex> a_;
};

double off_diagonal_mass(Work& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::size_t j = 0; j < a.n(); ++j) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

// Annihilates a(p,q) with the unitary G = diag(1, conj(e)) * R(c, s) acting
// on the (p,q) plane, where e = a(p,q)/|a(p,q)| and R is the real Jacobi
// rotation of the resulting real symmetric 2x2 block.
void rotate(Work& a, Work& v, std::size_t p, std::size_t q) {
  const Complex h = a(p, q);
  const double g = std::abs(h);
  if (g == 0.0) return;
  const Complex phase = std::conj(h / g);
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * g);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) /
        (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const std::size_t n = a.n();
  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    const Complex new_kp = c * akp - s * phase * akq;
    const Complex new_kq = s * akp + c * phase * akq;
    a(k, p) = new_kp;
    a(k, q) = new_kq;
    a(p, k) = std::conj(new_kp);
    a(q, k) = std::conj(new_kq);
  }
  a(p, p) = app - t * g;
  a(q, q) = aqq + t * g;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - s * phase * vkq;
    v(k, q) = s * vkp + c * phase * vkq;
  }
}

}  // namespace

HermitianEigen hermitian_eigen(const ComplexMatrix& h,
                               const TolerancePolicy& pol) {
  const ComplexMatrix h_adj = adjoint(h);
  if (!approx_equal(h, h_adj, pol)) {
    const double asym = frobenius_norm(subtract(h, h_adj));
    throw DomainError("hermitian_eigen: input is not self-adjoint", asym);
  }
  const ComplexMatrix sym = hermitian_part(h);
  const std::size_t n = sym.dim();

  Work a(sym);
  Work v(ComplexMatrix::identity(n));
  const double threshold = static_cast<double>(n) * kEps * frobenius_norm(sym);

  bool converged = false;
  double off = off_diagonal_mass(a);
  for (int sweep = 0; sweep <= kMaxJacobiSweeps; ++sweep) {
    if (off <= threshold) {
      converged = true;
      break;
    }
    if (sweep == kMaxJacobiSweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
    off = off_diagonal_mass(a);
  }
  if (!converged) {
    throw NumericalError("hermitian_eigen: Jacobi sweeps did not converge",
                         off);
  }

  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return diag[x] < diag[y]; });

  std::vector<double> values(n);
  std::vector<Complex> vecs(n * n);
  for (std::size_t col = 0; col < n; ++col) {
    values[col] = diag[order[col]];
    for (std::size_t row = 0; row < n; ++row) {
      vecs[row * n + col] = v(row, order[col]);
    }
  }
  return HermitianEigen{std::move(values), ComplexMatrix(n, std::move(vecs))};
}

ComplexMatrix spectral_synthesis(const ComplexMatrix& eigenvectors,
                                 std::span<const double> values) {
  const std::size_t n = eigenvectors.dim();
  if (values.size() != n) {
    throw DimensionMismatch("spectral_synthesis: value count mismatch");
  }
  // out(i,j) = sum_k U(i,k) f_k conj(U(j,k)); only the upper triangle is
  // accumulated and mirrored so the result is exactly self-adjoint.
  std::vector<Complex> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Complex sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        sum += eigenvectors(i, k) * values[k] * std::conj(eigenvectors(j, k));
      }
      if (i == j) {
        out[i * n + i] = sum.real();
      } else {
        out[i * n + j] = sum;
        out[j * n + i] = std::conj(sum);
      }
    }
  }
  return ComplexMatrix(n, std::move(out));
}

}  // namespace opabs
