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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "opabs/hermitian.hpp"

namespace opabs {

void TolerancePolicy::validate() const {
  if (!(rel > 0.0) || !(abs > 0.0) || !std::isfinite(rel) ||
      !std::isfinite(abs)) {
    throw std::invalid_argument("tolerance policy requires rel > 0 and abs > 0");
  }
}

double TolerancePolicy::bound(double scale) const {
  return rel * std::max(1.0, scale) + abs;
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ == 0) {
    throw std::invalid_argument("matrix dimension must be positive");
  }
  if (entries_.size() != dim_ * dim_) {
    throw std::invalid_argument("matrix entry count " +
                                std::to_string(entries_.size()) +
                                " does not equal dim^2 = " +
                                std::to_string(dim_ * dim_));
  }
  for (const Complex& z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("matrix entries must be finite");
    }
  }
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t n = rows.size();
  std::vector<Complex> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) {
      throw std::invalid_argument("matrix literal must be square");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexMatrix(n, std::move(entries));
}

ComplexMatrix ComplexMatrix::zero(std::size_t dim) {
  return ComplexMatrix(dim, std::vector<Complex>(dim * dim));
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  std::vector<Complex> entries(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) entries[i * dim + i] = 1.0;
  return ComplexMatrix(dim, std::move(entries));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  const std::size_t n = diag.size();
  std::vector<Complex> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = diag[i];
  return ComplexMatrix(n, std::move(entries));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  std::vector<Complex> z(diag.begin(), diag.end());
  return diagonal(std::span<const Complex>(z));
}

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b,
                      const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(op) + ": dimension mismatch (" +
                            std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()) + ")");
  }
}

}  // namespace

ComplexMatrix adjoint(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<Complex> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = std::conj(a(j, i));
  }
  return ComplexMatrix(n, std::move(out));
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "multiply");
  const std::size_t n = a.dim();
  std::vector<Complex> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) sum += a(i, k) * b(k, j);
      out[i * n + j] = sum;
    }
  }
  return ComplexMatrix(n, std::move(out));
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "add");
  std::vector<Complex> out(a.entries().begin(), a.entries().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.entries()[i];
  return ComplexMatrix(a.dim(), std::move(out));
}

ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "subtract");
  std::vector<Complex> out(a.entries().begin(), a.entries().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.entries()[i];
  return ComplexMatrix(a.dim(), std::move(out));
}

ComplexMatrix scale(const ComplexMatrix& a, Complex factor) {
  std::vector<Complex> out(a.entries().begin(), a.entries().end());
  for (Complex& z : out) z *= factor;
  return ComplexMatrix(a.dim(), std::move(out));
}

ComplexMatrix hermitian_part(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<Complex> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i * n + i] = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (a(i, j) + std::conj(a(j, i)));
      out[i * n + j] = v;
      out[j * n + i] = std::conj(v);
    }
  }
  return ComplexMatrix(n, std::move(out));
}

ComplexMatrix imaginary_part(const ComplexMatrix& a) {
  // (A - A*)/(2i) = -i/2 (A - A*)
  return scale(subtract(a, adjoint(a)), Complex{0.0, -0.5});
}

double frobenius_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (const Complex& z : a.entries()) sum += std::norm(z);
  return std::sqrt(sum);
}

Complex trace(const ComplexMatrix& a) {
  Complex sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) sum += a(i, i);
  return sum;
}

bool approx_equal(const ComplexMatrix& x, const ComplexMatrix& y,
                  const TolerancePolicy& pol) {
  const double diff = frobenius_norm(subtract(x, y));
  const double scale =
      std::max(frobenius_norm(x), frobenius_norm(y));
  return diff <= pol.bound(scale);
}

double operator_norm(const ComplexMatrix& a) {
  const HermitianEigen eig = hermitian_eigen(multiply(adjoint(a), a));
  return std::sqrt(std::max(0.0, eig.max()));
}

std::string to_string(const ComplexMatrix& a) {
  std::ostringstream os;
  os.precision(6);
  os << "[";
  for (std::size_t i = 0; i < a.dim(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Complex z = a(i, j);
      os << (j ? ", " : "") << z.real();
      if (z.imag() != 0.0) os << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    }
  }
  os << "]";
  return os.str();
}

}  // namespace opabs
