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

#ifndef OPABS_CALCULUS_HPP_
#define OPABS_CALCULUS_HPP_

#include "opabs/hermitian.hpp"
#include "opabs/matrix.hpp"

namespace opabs {

/// A self-adjoint matrix whose smallest eigenvalue is at least
/// -rel * max(1, lambda_max). Carries its eigendecomposition so the
/// functional calculus below never diagonalizes twice.
class PsdMatrix {
 public:
  /// Validates and wraps `m`. Throws DomainError if `m` is not
  /// self-adjoint within `pol` (witness: ||m - m*||_F) or if
  /// lambda_min(m) < -tolerance (witness: lambda_min).
  static PsdMatrix from(const ComplexMatrix& m, const TolerancePolicy& pol = {});

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const HermitianEigen& eigen() const noexcept { return eigen_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }
  /// Eigenvalues in [-clamp_tolerance, 0) are treated as exact zeros.
  double clamp_tolerance() const noexcept { return clamp_tol_; }

 private:
  PsdMatrix(ComplexMatrix m, HermitianEigen eig, double clamp_tol)
      : matrix_(std::move(m)), eigen_(std::move(eig)), clamp_tol_(clamp_tol) {}

  friend PsdMatrix psd_sqrt(const PsdMatrix&);
  friend PsdMatrix psd_power(const PsdMatrix&, double);

  ComplexMatrix matrix_;
  HermitianEigen eigen_;
  double clamp_tol_;
};

/// Outcome of an A <= B test in the Loewner order.
struct LoewnerVerdict {
  bool holds = false;
  /// lambda_min(B - A).
  double witness_lambda_min = 0.0;
  /// witness + tolerance; non-negative exactly when `holds`.
  double margin = 0.0;
};

/// Principal square root via the eigendecomposition.
PsdMatrix psd_sqrt(const PsdMatrix& p);

/// Maximum coupled iterations in psd_sqrt_iterative.
inline constexpr int kMaxDenmanBeaversIterations = 100;

/// Principal square root via the scaled Denman-Beavers iteration on
/// P + delta*I, delta = pol.abs * max(1, ||P||_F). Shares no code path with
/// psd_sqrt beyond the final PSD validation. Throws NumericalError if the
/// shifted matrix is singular or the iteration does not settle.
PsdMatrix psd_sqrt_iterative(const PsdMatrix& p, const TolerancePolicy& pol = {});

/// |A| = sqrt(A* A).
PsdMatrix abs_value(const ComplexMatrix& a, const TolerancePolicy& pol = {});

/// P^alpha for alpha in [0, 1], with 0^0 = 1 (so P^0 = I).
PsdMatrix psd_power(const PsdMatrix& p, double alpha);

/// A <= B, decided by lambda_min(B - A) >= -(rel * max(1, ||A||_F, ||B||_F) + abs).
/// Throws DomainError if either side is not self-adjoint within `pol`.
LoewnerVerdict loewner_leq(const ComplexMatrix& a, const ComplexMatrix& b,
                           const TolerancePolicy& pol = {});

/// Largest accepted 2-norm condition number for inverse().
inline constexpr double kMaxConditionNumber = 1e8;

/// sigma_max / sigma_min from the eigenvalues of A* A; +inf when singular.
double condition_number(const ComplexMatrix& a);

/// Gauss-Jordan inverse with partial pivoting (largest modulus, lowest row
/// on ties). Throws NumericalError("numerically singular") when the
/// condition number exceeds kMaxConditionNumber.
ComplexMatrix inverse(const ComplexMatrix& a);

}  // namespace opabs

#endif  // OPABS_CALCULUS_HPP_
