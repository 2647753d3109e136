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

#ifndef OPABS_MATRIX_HPP_
#define OPABS_MATRIX_HPP_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace opabs {

using Complex = std::complex<double>;

/// Thrown when two operands do not share a dimension.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an input violates a mathematical precondition (not
/// self-adjoint, not positive, ...). `witness()` carries the offending
/// residual or eigenvalue.
class DomainError : public std::domain_error {
 public:
  DomainError(const std::string& what, double witness)
      : std::domain_error(what), witness_(witness) {}
  double witness() const noexcept { return witness_; }

 private:
  double witness_;
};

/// Thrown when an iterative kernel fails to converge or a matrix is
/// numerically singular.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Relative/absolute thresholds shared by every approximate comparison.
struct TolerancePolicy {
  double rel = 1e-9;
  double abs = 1e-12;

  /// Throws std::invalid_argument unless both thresholds are positive.
  void validate() const;

  /// rel * max(1, scale) + abs.
  double bound(double scale) const;

  friend bool operator==(const TolerancePolicy&,
                         const TolerancePolicy&) = default;
};

/// Dense square complex matrix, row-major. Immutable once constructed;
/// construction rejects non-finite entries.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  /// Row-wise literal, e.g. ComplexMatrix::from_rows({{1, 1}, {0, 1}}).
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);
  static ComplexMatrix zero(std::size_t dim);
  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  static ComplexMatrix diagonal(std::span<const double> diag);

  std::size_t dim() const noexcept { return dim_; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  std::span<const Complex> entries() const noexcept { return entries_; }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

ComplexMatrix adjoint(const ComplexMatrix& a);

/// Row-by-column product; each entry accumulates over k in index order.
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(const ComplexMatrix& a, Complex factor);

/// (A + A*) / 2.
ComplexMatrix hermitian_part(const ComplexMatrix& a);
/// (A - A*) / (2i).
ComplexMatrix imaginary_part(const ComplexMatrix& a);

double frobenius_norm(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);

/// ||X - Y||_F <= rel * max(1, ||X||_F, ||Y||_F) + abs.
bool approx_equal(const ComplexMatrix& x, const ComplexMatrix& y,
                  const TolerancePolicy& pol);

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  return add(a, b);
}
inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  return subtract(a, b);
}
inline ComplexMatrix operator-(const ComplexMatrix& a) {
  return scale(a, Complex{-1.0, 0.0});
}
inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  return multiply(a, b);
}
inline ComplexMatrix operator*(Complex factor, const ComplexMatrix& a) {
  return scale(a, factor);
}

/// Largest singular value, sqrt(lambda_max(A*A)).
double operator_norm(const ComplexMatrix& a);

std::string to_string(const ComplexMatrix& a);

}  // namespace opabs

#endif  // OPABS_MATRIX_HPP_
