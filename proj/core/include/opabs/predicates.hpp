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

#ifndef OPABS_PREDICATES_HPP_
#define OPABS_PREDICATES_HPP_

#include "opabs/matrix.hpp"

namespace opabs {

/// A tolerance-aware yes/no answer plus the number that decided it.
///
/// `residual` is the raw backing quantity (a Frobenius norm for the
/// equality-type predicates, a smallest eigenvalue for the order-type
/// ones). `margin` is signed distance to the threshold: >= 0 iff `holds`.
struct PredicateResult {
  bool holds = false;
  double residual = 0.0;
  double margin = 0.0;

  explicit operator bool() const noexcept { return holds; }
};

/// ||A - A*||_F <= rel * max(1, ||A||_F) + abs.
PredicateResult is_self_adjoint(const ComplexMatrix& a, const TolerancePolicy& pol = {});

/// ||A A* - A* A||_F <= rel * max(1, ||A||_F^2) + abs.
PredicateResult is_normal(const ComplexMatrix& a, const TolerancePolicy& pol = {});

/// A A* <= A* A in the Loewner order; residual is lambda_min(A*A - AA*).
PredicateResult is_hyponormal(const ComplexMatrix& a, const TolerancePolicy& pol = {});

/// Self-adjoint within tolerance and lambda_min >= -tol. Residual is
/// lambda_min of the hermitian part (or -inf when not self-adjoint).
PredicateResult is_positive(const ComplexMatrix& a, const TolerancePolicy& pol = {});

/// ||A + A*||_F <= rel * max(1, ||A||_F) + abs.
PredicateResult is_anti_symmetric(const ComplexMatrix& a, const TolerancePolicy& pol = {});

/// ||AB - BA||_F <= rel * max(1, ||A||_F ||B||_F) + abs. Throws
/// DimensionMismatch.
PredicateResult commutes(const ComplexMatrix& a, const ComplexMatrix& b,
                         const TolerancePolicy& pol = {});

/// Every class predicate at once. The implication chain
/// positive => self_adjoint => normal => hyponormal is enforced on the
/// booleans after the individual tolerance decisions.
struct ClassReport {
  bool self_adjoint = false;
  bool normal = false;
  bool hyponormal = false;
  bool positive = false;
  bool anti_symmetric = false;

  double self_adjoint_residual = 0.0;
  double normal_residual = 0.0;
  double hyponormal_residual = 0.0;
  double positive_residual = 0.0;
  double anti_symmetric_residual = 0.0;
};

ClassReport classify(const ComplexMatrix& a, const TolerancePolicy& pol = {});

}  // namespace opabs

#endif  // OPABS_PREDICATES_HPP_
