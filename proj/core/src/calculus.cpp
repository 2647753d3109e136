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

#include "opabs/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace opabs {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

std::vector<double> clamped(const HermitianEigen& eig) {
  std::vector<double> out(eig.eigenvalues);
  for (double& v : out) v = std::max(v, 0.0);
  return out;
}

// In-place LU with partial pivoting on a row-major buffer. Returns the
// determinant and fills `inv` with the inverse.
struct LuResult {
  Complex det;
  std::vector<Complex> inv;
  double min_pivot;
};

LuResult gauss_jordan(std::span<const Complex> src, std::size_t n) {
  std::vector<Complex> a(src.begin(), src.end());
  std::vector<Complex> inv(n * n);
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1.0;
  Complex det = 1.0;
  double min_pivot = std::numeric_limits<double>::infinity();

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(a[k * n + k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double mag = std::abs(a[i * n + k]);
      if (mag > best) {
        best = mag;
        piv = i;
      }
    }
    min_pivot = std::min(min_pivot, best);
    if (best == 0.0) return {0.0, {}, 0.0};
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[k * n + j], a[piv * n + j]);
        std::swap(inv[k * n + j], inv[piv * n + j]);
      }
      det = -det;
    }
    const Complex pivot = a[k * n + k];
    det *= pivot;
    for (std::size_t j = 0; j < n; ++j) {
      a[k * n + j] /= pivot;
      inv[k * n + j] /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Complex f = a[i * n + k];
      if (f == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a[i * n + j] -= f * a[k * n + j];
        inv[i * n + j] -= f * inv[k * n + j];
      }
    }
  }
  return {det, std::move(inv), min_pivot};
}

double max_abs_entry(std::span<const Complex> v) {
  double m = 0.0;
  for (const Complex& z : v) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace

PsdMatrix PsdMatrix::from(const ComplexMatrix& m, const TolerancePolicy& pol) {
  HermitianEigen eig = hermitian_eigen(m, pol);
  const double tol = pol.rel * std::max(1.0, eig.max());
  if (eig.min() < -tol) {
    throw DomainError("matrix is not positive semidefinite", eig.min());
  }
  return PsdMatrix(hermitian_part(m), std::move(eig), tol);
}

PsdMatrix psd_sqrt(const PsdMatrix& p) {
  std::vector<double> roots = clamped(p.eigen());
  for (double& v : roots) v = std::sqrt(v);
  ComplexMatrix r = spectral_synthesis(p.eigen().eigenvectors, roots);
  HermitianEigen eig{roots, p.eigen().eigenvectors};
  const double tol = p.clamp_tolerance() > 0.0
                         ? std::sqrt(p.clamp_tolerance())
                         : 0.0;
  return PsdMatrix(std::move(r), std::move(eig), tol);
}

PsdMatrix psd_sqrt_iterative(const PsdMatrix& p, const TolerancePolicy& pol) {
  const std::size_t n = p.dim();
  const double shift = pol.abs * std::max(1.0, frobenius_norm(p.matrix()));
  const ComplexMatrix shifted =
      add(p.matrix(), scale(ComplexMatrix::identity(n), shift));

  std::vector<Complex> y(shifted.entries().begin(), shifted.entries().end());
  std::vector<Complex> z(n * n);
  for (std::size_t i = 0; i < n; ++i) z[i * n + i] = 1.0;

  bool scaling = true;
  double prev_delta = std::numeric_limits<double>::infinity();
  for (int it = 0; it < kMaxDenmanBeaversIterations; ++it) {
    LuResult ly = gauss_jordan(y, n);
    LuResult lz = gauss_jordan(z, n);
    const double ymax = max_abs_entry(y);
    if (ly.inv.empty() || lz.inv.empty() ||
        ly.min_pivot <= static_cast<double>(n) * kEps * ymax) {
      throw NumericalError("psd_sqrt_iterative: singular beyond shift",
                           ly.min_pivot);
    }

    double mu = 1.0;
    if (scaling) {
      const double det_prod = std::abs(ly.det * lz.det);
      if (det_prod > 0.0 && std::isfinite(det_prod)) {
        mu = std::pow(det_prod, -1.0 / (2.0 * static_cast<double>(n)));
      }
    }

    // Y' = (mu Y + (mu Z)^{-1}) / 2, Z' = (mu Z + (mu Y)^{-1}) / 2.
    double delta = 0.0;
    double ynorm = 0.0;
    std::vector<Complex> y_next(n * n);
    std::vector<Complex> z_next(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
      y_next[i] = 0.5 * (mu * y[i] + lz.inv[i] / mu);
      z_next[i] = 0.5 * (mu * z[i] + ly.inv[i] / mu);
      delta += std::norm(y_next[i] - y[i]);
      ynorm += std::norm(y_next[i]);
    }
    delta = std::sqrt(delta);
    ynorm = std::sqrt(ynorm);
    y = std::move(y_next);
    z = std::move(z_next);

    const double rel_delta = delta / std::max(ynorm, std::numeric_limits<double>::min());
    if (rel_delta < 1e-2) scaling = false;
    if (rel_delta <= 10.0 * static_cast<double>(n) * kEps ||
        (rel_delta < 1e-10 && delta >= prev_delta)) {
      return PsdMatrix::from(hermitian_part(ComplexMatrix(n, std::move(y))), pol);
    }
    prev_delta = delta;
  }
  throw NumericalError("psd_sqrt_iterative: no convergence", prev_delta);
}

PsdMatrix abs_value(const ComplexMatrix& a, const TolerancePolicy& pol) {
  return psd_sqrt(PsdMatrix::from(multiply(adjoint(a), a), pol));
}

PsdMatrix psd_power(const PsdMatrix& p, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("psd_power: exponent must lie in [0, 1]", alpha);
  }
  if (alpha == 1.0) return p;
  std::vector<double> values = clamped(p.eigen());
  for (double& v : values) {
    v = alpha == 0.5 ? std::sqrt(v) : std::pow(v, alpha);  // pow(0, 0) == 1
  }
  ComplexMatrix r = alpha == 0.0
                        ? ComplexMatrix::identity(p.dim())
                        : spectral_synthesis(p.eigen().eigenvectors, values);
  HermitianEigen eig{values, p.eigen().eigenvectors};
  const double tol = alpha == 0.0 ? 0.0 : std::pow(p.clamp_tolerance(), alpha);
  return PsdMatrix(std::move(r), std::move(eig), tol);
}

LoewnerVerdict loewner_leq(const ComplexMatrix& a, const ComplexMatrix& b,
                           const TolerancePolicy& pol) {
  for (const ComplexMatrix* m : {&a, &b}) {
    const ComplexMatrix m_adj = adjoint(*m);
    if (!approx_equal(*m, m_adj, pol)) {
      throw DomainError("loewner_leq: operand is not self-adjoint",
                        frobenius_norm(subtract(*m, m_adj)));
    }
  }
  const double tol =
      pol.bound(std::max(frobenius_norm(a), frobenius_norm(b)));
  const HermitianEigen eig = hermitian_eigen(hermitian_part(subtract(b, a)), pol);
  LoewnerVerdict v;
  v.witness_lambda_min = eig.min();
  v.margin = eig.min() + tol;
  v.holds = v.margin >= 0.0;
  return v;
}

double condition_number(const ComplexMatrix& a) {
  const HermitianEigen eig = hermitian_eigen(multiply(adjoint(a), a));
  if (eig.min() <= 0.0) return std::numeric_limits<double>::infinity();
  return std::sqrt(eig.max() / eig.min());
}

ComplexMatrix inverse(const ComplexMatrix& a) {
  const double kappa = condition_number(a);
  if (!(kappa <= kMaxConditionNumber)) {
    throw NumericalError("inverse: numerically singular", kappa);
  }
  LuResult lu = gauss_jordan(a.entries(), a.dim());
  if (lu.inv.empty()) {
    throw NumericalError("inverse: numerically singular", kappa);
  }
  return ComplexMatrix(a.dim(), std::move(lu.inv));
}

}  // namespace opabs
