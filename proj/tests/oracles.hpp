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

// Independent reference computations for tests. None of these call into
// the eigensolver or the square-root kernels under test.

#ifndef OPABS_TESTS_ORACLES_HPP_
#define OPABS_TESTS_ORACLES_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "opabs/matrix.hpp"

namespace opabs::testing {

// Eigenvalues of a 2x2 Hermitian [[a, b], [conj(b), d]] from the
// characteristic polynomial, ascending.
inline std::array<double, 2> eig2(const ComplexMatrix& h) {
  const double a = h(0, 0).real();
  const double d = h(1, 1).real();
  const double mean = 0.5 * (a + d);
  const double radius = std::hypot(0.5 * (a - d), std::abs(h(0, 1)));
  return {mean - radius, mean + radius};
}

// Principal square root of a 2x2 PSD matrix: (M + s I) / t with
// s = sqrt(det M), t = sqrt(tr M + 2 s).
inline ComplexMatrix sqrt2x2(const ComplexMatrix& m) {
  const double det = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
  const double s = std::sqrt(std::max(0.0, det));
  const double t = std::sqrt(m(0, 0).real() + m(1, 1).real() + 2.0 * s);
  return ComplexMatrix::from_rows({{(m(0, 0) + s) / t, m(0, 1) / t},
                                   {m(1, 0) / t, (m(1, 1) + s) / t}});
}

// Naive product written independently of multiply().
inline ComplexMatrix naive_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.dim();
  std::vector<Complex> out(n * n, Complex{});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += a(i, k) * b(k, j);
    }
  }
  return ComplexMatrix(n, std::move(out));
}

// Largest singular value by power iteration on A*A.
inline double power_norm(const ComplexMatrix& a, int iterations = 2000) {
  const std::size_t n = a.dim();
  std::vector<Complex> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = Complex(1.0 + 0.37 * i, 0.11 * i);
  double lambda = 0.0;
  for (int it = 0; it < iterations; ++it) {
    std::vector<Complex> y(n), z(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) y[i] += a(i, j) * x[j];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) z[i] += std::conj(a(j, i)) * y[j];
    double norm = 0.0;
    for (const Complex& v : z) norm += std::norm(v);
    norm = std::sqrt(norm);
    if (norm == 0.0) return 0.0;
    lambda = norm;
    for (std::size_t i = 0; i < n; ++i) x[i] = z[i] / norm;
  }
  return std::sqrt(lambda);
}

inline double dist(const ComplexMatrix& x, const ComplexMatrix& y) {
  return frobenius_norm(subtract(x, y));
}

inline ComplexMatrix diag2(double a, double b) {
  return ComplexMatrix::from_rows({{a, 0.0}, {0.0, b}});
}

}  // namespace opabs::testing

#endif  // OPABS_TESTS_ORACLES_HPP_
