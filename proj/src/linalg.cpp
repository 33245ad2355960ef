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

#include "qdistill/linalg.hpp"

#include <cmath>
#include <string>

namespace qdistill {

double hermiticity_defect(const MatrixX& m) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst;
}

bool is_hermitian(const MatrixX& m, double tolerance) {
  return m.rows() == m.cols() && hermiticity_defect(m) <= tolerance;
}

namespace {

void require_hermitian(const MatrixX& h, const char* who) {
  if (h.rows() != h.cols()) {
    throw std::invalid_argument(std::string(who) + ": matrix must be square");
  }
  if (!h.allFinite()) {
    throw std::invalid_argument(std::string(who) +
                                ": matrix entries must be finite");
  }
  Eigen::Index wi = 0, wj = 0;
  double worst = 0.0;
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    for (Eigen::Index j = 0; j < h.cols(); ++j) {
      const double d = std::abs(h(i, j) - std::conj(h(j, i)));
      if (d > worst) {
        worst = d;
        wi = i;
        wj = j;
      }
    }
  }
  if (worst > tol::kHermitian) {
    throw std::invalid_argument(
        std::string(who) + ": matrix is not Hermitian, |h(" +
        std::to_string(wi) + "," + std::to_string(wj) + ") - conj(h(" +
        std::to_string(wj) + "," + std::to_string(wi) + "))| = " +
        std::to_string(worst));
  }
}

}  // namespace

HermitianEigen hermitian_eigen(const MatrixX& h) {
  require_hermitian(h, "hermitian_eigen");
  Eigen::SelfAdjointEigenSolver<MatrixX> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigen: eigensolver failed to converge");
  }
  return HermitianEigen{solver.eigenvalues(), solver.eigenvectors()};
}

MatrixX sqrt_psd(const MatrixX& h) {
  const HermitianEigen eig = hermitian_eigen(h);
  Eigen::VectorXd roots(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    const double lambda = eig.values(i);
    if (lambda < -tol::kPsd) {
      throw std::invalid_argument(
          "sqrt_psd: matrix is not positive semidefinite, min eigenvalue = " +
          std::to_string(lambda));
    }
    roots(i) = lambda < tol::kEigenvalueFloor ? 0.0 : std::sqrt(lambda);
  }
  return eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
}

}  // namespace qdistill
