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

#include "opabs/predicates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "opabs/calculus.hpp"
#include "opabs/hermitian.hpp"

namespace opabs {
namespace {

PredicateResult norm_below(double residual, double threshold) {
  return {residual <= threshold, residual, threshold - residual};
}

}  // namespace

PredicateResult is_self_adjoint(const ComplexMatrix& a, const TolerancePolicy& pol) {
  const double r = frobenius_norm(subtract(a, adjoint(a)));
  return norm_below(r, pol.bound(frobenius_norm(a)));
}

PredicateResult is_normal(const ComplexMatrix& a, const TolerancePolicy& pol) {
  const ComplexMatrix a_adj = adjoint(a);
  const double r = frobenius_norm(subtract(multiply(a, a_adj), multiply(a_adj, a)));
  const double fa = frobenius_norm(a);
  return norm_below(r, pol.bound(fa * fa));
}

PredicateResult is_hyponormal(const ComplexMatrix& a, const TolerancePolicy& pol) {
  const ComplexMatrix a_adj = adjoint(a);
  const LoewnerVerdict v =
      loewner_leq(multiply(a, a_adj), multiply(a_adj, a), pol);
  return {v.holds, v.witness_lambda_min, v.margin};
}

PredicateResult is_positive(const ComplexMatrix& a, const TolerancePolicy& pol) {
  const PredicateResult sa = is_self_adjoint(a, pol);
  if (!sa.holds) {
    return {false, -std::numeric_limits<double>::infinity(), sa.margin};
  }
  const HermitianEigen eig = hermitian_eigen(hermitian_part(a), pol);
  const double tol = pol.bound(frobenius_norm(a));
  return {eig.min() >= -tol, eig.min(), eig.min() + tol};
}

PredicateResult is_anti_symmetric(const ComplexMatrix& a, const TolerancePolicy& pol) {
  const double r = frobenius_norm(add(a, adjoint(a)));
  return norm_below(r, pol.bound(frobenius_norm(a)));
}

PredicateResult commutes(const ComplexMatrix& a, const ComplexMatrix& b,
                         const TolerancePolicy& pol) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("commutes: dimension mismatch");
  }
  const double r = frobenius_norm(subtract(multiply(a, b), multiply(b, a)));
  return norm_below(r, pol.bound(frobenius_norm(a) * frobenius_norm(b)));
}

ClassReport classify(const ComplexMatrix& a, const TolerancePolicy& pol) {
  const PredicateResult sa = is_self_adjoint(a, pol);
  const PredicateResult nm = is_normal(a, pol);
  const PredicateResult hy = is_hyponormal(a, pol);
  const PredicateResult ps = is_positive(a, pol);
  const PredicateResult an = is_anti_symmetric(a, pol);

  ClassReport r;
  r.positive = ps.holds;
  r.self_adjoint = sa.holds || r.positive;
  r.normal = nm.holds || r.self_adjoint;
  r.hyponormal = hy.holds || r.normal;
  r.anti_symmetric = an.holds;

  r.self_adjoint_residual = sa.residual;
  r.normal_residual = nm.residual;
  r.hyponormal_residual = hy.residual;
  r.positive_residual = ps.residual;
  r.anti_symmetric_residual = an.residual;
  return r;
}

}  // namespace opabs
