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

#ifndef OPABS_HERMITIAN_HPP_
#define OPABS_HERMITIAN_HPP_

#include <span>
#include <vector>

#include "opabs/matrix.hpp"

namespace opabs {

/// H = U diag(eigenvalues) U*, eigenvalues ascending, U unitary (columns
/// are eigenvectors).
struct HermitianEigen {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  double min() const { return eigenvalues.front(); }
  double max() const { return eigenvalues.back(); }
};

/// Maximum number of cyclic Jacobi sweeps before giving up.
inline constexpr int kMaxJacobiSweeps = 30;

/// Cyclic complex Jacobi eigendecomposition of a self-adjoint matrix.
///
/// The input must be self-adjoint within `pol` (approx_equal(H, H*));
/// otherwise DomainError is thrown with ||H - H*||_F as witness. The
/// hermitian part (H + H*)/2 is what gets diagonalized. Sweeps stop once
/// the off-diagonal Frobenius mass drops to n * eps * ||H||_F; if that
/// does not happen within kMaxJacobiSweeps a NumericalError carrying the
/// remaining off-diagonal mass is thrown.
HermitianEigen hermitian_eigen(const ComplexMatrix& h,
                               const TolerancePolicy& pol = {});

/// U diag(values) U*, returned exactly self-adjoint.
ComplexMatrix spectral_synthesis(const ComplexMatrix& eigenvectors,
                                 std::span<const double> values);

}  // namespace opabs

#endif  // OPABS_HERMITIAN_HPP_
