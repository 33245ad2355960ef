// Copyright 2026 The qdistill developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace qdistill {

using Complex = std::complex<double>;
using MatrixX = Eigen::MatrixXcd;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Vector4 = Eigen::Vector4cd;

/// Every numerical gate in the library goes through this one set of
/// tolerances. Downstream modules validate against the same constants, so a
/// matrix accepted by one layer is accepted by all of them.
namespace tol {
inline constexpr double kHermitian = 1e-10;       // max |H - H^dag| entry
inline constexpr double kPsd = 1e-10;             // eigenvalue floor for PSD checks
inline constexpr double kReconstruction = 1e-9;   // eigendecomposition round trip
inline constexpr double kTrace = 1e-10;           // |tr(rho) - 1|
inline constexpr double kProbabilitySum = 1e-12;  // mixture / outcome weights
inline constexpr double kClassify = 1e-9;         // family matching default
inline constexpr double kDegenerateOutcome = 1e-14;  // below this a conditional state
                                                     // cannot be renormalized
// Eigenvalues of validated unit-trace matrices below this level are
// floating-point noise and are treated as exact zeros (keeps square roots of
// rank-deficient states from amplifying eps-scale residue to sqrt(eps)).
inline constexpr double kEigenvalueFloor = 1e-13;
}  // namespace tol

inline Matrix2 identity2() { return Matrix2::Identity(); }

inline Matrix2 pauli_x() {
  Matrix2 m;
  m << 0, 1, 1, 0;
  return m;
}

inline Matrix2 pauli_y() {
  Matrix2 m;
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

inline Matrix2 pauli_z() {
  Matrix2 m;
  m << 1, 0, 0, -1;
  return m;
}

/// Kronecker product with the row/column convention
/// index(result) = index(a) * dim(b) + index(b).
///
/// The library's state spaces stop at two copies of two qubits, so any
/// product that would exceed dimension 16 is rejected.
template <typename DerivedA, typename DerivedB>
MatrixX tensor(const Eigen::MatrixBase<DerivedA>& a,
               const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols()) {
    throw std::invalid_argument("tensor: inputs must be square");
  }
  const Eigen::Index dim = a.rows() * b.rows();
  if (dim > 16) {
    throw std::invalid_argument("tensor: result dimension " +
                                std::to_string(dim) +
                                " exceeds the supported maximum of 16");
  }
  MatrixX out(dim, dim);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          Complex(a(i, j)) * b;
    }
  }
  return out;
}

/// Largest |m(i,j) - conj(m(j,i))| over all entries.
double hermiticity_defect(const MatrixX& m);

bool is_hermitian(const MatrixX& m, double tolerance = tol::kHermitian);

struct HermitianEigen {
  Eigen::VectorXd values;  // ascending
  MatrixX vectors;         // orthonormal columns, same order
};

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
/// Near-degenerate eigenvalues are reported as-is; the eigenvectors of a
/// degenerate cluster are only guaranteed to span the right subspace.
/// Throws std::invalid_argument naming the worst entry if the input is not
/// Hermitian within tol::kHermitian.
HermitianEigen hermitian_eigen(const MatrixX& h);

/// Hermitian PSD square root: the returned S satisfies S*S = h to within
/// 1e-8 per entry. Eigenvalues in [-tol::kPsd, tol::kEigenvalueFloor) are
/// clamped to zero; anything below -tol::kPsd raises std::invalid_argument.
MatrixX sqrt_psd(const MatrixX& h);

}  // namespace qdistill
