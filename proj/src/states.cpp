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

#include "qdistill/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace qdistill {

namespace {
constexpr double kInvSqrt2 = 0.7071067811865475244;
}

Vector4 basis_ket(int index) {
  if (index < 0 || index > 3) {
    throw std::invalid_argument("basis_ket: index must be in [0, 4)");
  }
  Vector4 v = Vector4::Zero();
  v(index) = 1.0;
  return v;
}

Vector4 bell_vector(BellState s) {
  Vector4 v = Vector4::Zero();
  switch (s) {
    case BellState::PhiPlus:
      v(1) = kInvSqrt2;
      v(2) = kInvSqrt2;
      break;
    case BellState::PhiMinus:
      v(1) = kInvSqrt2;
      v(2) = -kInvSqrt2;
      break;
    case BellState::PsiPlus:
      v(0) = kInvSqrt2;
      v(3) = kInvSqrt2;
      break;
    case BellState::PsiMinus:
      v(0) = kInvSqrt2;
      v(3) = -kInvSqrt2;
      break;
  }
  return v;
}

const char* to_string(BellState s) {
  switch (s) {
    case BellState::PhiPlus:
      return "phi+";
    case BellState::PhiMinus:
      return "phi-";
    case BellState::PsiPlus:
      return "psi+";
    case BellState::PsiMinus:
      return "psi-";
  }
  return "?";
}

DensityMatrix::DensityMatrix(const Matrix4& m) : m_(m) {
  if (!m_.allFinite()) {
    throw std::invalid_argument("DensityMatrix: entries must be finite");
  }
  const double defect = hermiticity_defect(m_);
  if (defect > tol::kHermitian) {
    throw std::invalid_argument(
        "DensityMatrix: not Hermitian, defect = " + std::to_string(defect));
  }
  const double trace_error = std::abs(m_.trace() - Complex(1.0));
  if (trace_error > tol::kTrace) {
    throw std::invalid_argument("DensityMatrix: trace differs from 1 by " +
                                std::to_string(trace_error));
  }
  const HermitianEigen eig = hermitian_eigen(m_);
  if (eig.values(0) < -tol::kPsd) {
    throw std::invalid_argument(
        "DensityMatrix: not positive semidefinite, min eigenvalue = " +
        std::to_string(eig.values(0)));
  }
}

DensityMatrix DensityMatrix::maximally_mixed() {
  return DensityMatrix(Matrix4::Identity() * 0.25);
}

PureStateMixture::PureStateMixture(std::vector<WeightedPureState> components)
    : components_(std::move(components)) {
  if (components_.empty()) {
    throw std::invalid_argument("PureStateMixture: empty decomposition");
  }
  double total = 0.0;
  for (const auto& c : components_) {
    if (!(c.probability > 0.0) || !std::isfinite(c.probability) ||
        !c.state.allFinite()) {
      throw std::invalid_argument(
          "PureStateMixture: probabilities must be strictly positive and "
          "every entry finite");
    }
    const double norm_error = std::abs(c.state.norm() - 1.0);
    if (norm_error > tol::kHermitian) {
      throw std::invalid_argument(
          "PureStateMixture: component state is not a unit vector, |norm-1| = " +
          std::to_string(norm_error));
    }
    total += c.probability;
  }
  if (std::abs(total - 1.0) > tol::kProbabilitySum) {
    throw std::invalid_argument(
        "PureStateMixture: probabilities sum to " + std::to_string(total));
  }
}

DensityMatrix from_mixture(const PureStateMixture& mix) {
  Matrix4 m = Matrix4::Zero();
  for (const auto& c : mix.components()) {
    m += c.probability * (c.state * c.state.adjoint());
  }
  return DensityMatrix(m);
}

DensityMatrix rank2_state(double p1) {
  if (!(p1 > 0.0 && p1 < 1.0)) {
    throw std::domain_error("rank2_state: p1 must lie strictly inside (0,1)");
  }
  return from_mixture(PureStateMixture{{
      {1.0 - p1, basis_ket(0)},
      {p1, bell_vector(BellState::PhiPlus)},
  }});
}

DensityMatrix nondiagonal_state(const NonDiagonalParams& p) {
  const double d00 = p.b + p.c;
  const double d11 = p.a - p.b;
  const double d22 = p.a - p.c;
  if (d00 < -tol::kPsd || d11 < -tol::kPsd || d22 < -tol::kPsd) {
    throw std::invalid_argument(
        "nondiagonal_state: diagonal entries must be nonnegative");
  }
  if (std::abs((d00 + d11 + d22) / 2.0 - 1.0) > tol::kTrace) {
    throw std::invalid_argument(
        "nondiagonal_state: parameters violate trace normalization");
  }
  Matrix4 m = Matrix4::Zero();
  m(0, 0) = d00 / 2.0;
  m(1, 1) = d11 / 2.0;
  m(2, 2) = d22 / 2.0;
  m(1, 2) = p.d / 2.0;
  m(2, 1) = p.d / 2.0;
  const HermitianEigen eig = hermitian_eigen(m);
  if (eig.values(0) < -tol::kPsd) {
    throw std::invalid_argument(
        "nondiagonal_state: |d| too large, min eigenvalue = " +
        std::to_string(eig.values(0)));
  }
  return DensityMatrix(m);
}

namespace {

Matrix4 spin_flip_conjugate(const Matrix4& m) {
  // (sy x sy) conj(m) (sy x sy); sy x sy is the real anti-diagonal
  // (-1, 1, 1, -1), so no complex arithmetic is needed for the sandwich.
  Matrix4 yy = Matrix4::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  return yy * m.conjugate() * yy;
}

}  // namespace

double concurrence(const DensityMatrix& rho) {
  const Matrix4 root = sqrt_psd(rho.matrix());
  const Matrix4 flipped = spin_flip_conjugate(rho.matrix());
  MatrixX inner = root * flipped * root;
  inner = ((inner + inner.adjoint()) / 2.0).eval();
  const HermitianEigen eig = hermitian_eigen(inner);
  // lambda_i = eigenvalues of sqrt_psd(inner), i.e. the square roots of the
  // clamped eigenvalues of inner; ascending order puts the largest last.
  double lambda[4];
  for (int i = 0; i < 4; ++i) {
    const double v = eig.values(i);
    lambda[i] = v < tol::kEigenvalueFloor ? 0.0 : std::sqrt(v);
  }
  const double c = lambda[3] - lambda[2] - lambda[1] - lambda[0];
  return c > 0.0 ? c : 0.0;
}

Matrix4 partial_transpose(const Matrix4& m) {
  Matrix4 out;
  for (int a = 0; a < 2; ++a) {
    for (int ap = 0; ap < 2; ++ap) {
      for (int b = 0; b < 2; ++b) {
        for (int bp = 0; bp < 2; ++bp) {
          out(2 * a + bp, 2 * ap + b) = m(2 * a + b, 2 * ap + bp);
        }
      }
    }
  }
  return out;
}

bool ppt_is_separable(const DensityMatrix& rho) {
  const HermitianEigen eig = hermitian_eigen(partial_transpose(rho.matrix()));
  return eig.values(0) >= -tol::kPsd;
}

double fidelity_with_pure(const DensityMatrix& rho, const Vector4& psi) {
  const double norm_error = std::abs(psi.norm() - 1.0);
  if (norm_error > tol::kHermitian) {
    throw std::invalid_argument(
        "fidelity_with_pure: psi is not a unit vector, |norm-1| = " +
        std::to_string(norm_error));
  }
  const Complex f = (psi.adjoint() * rho.matrix() * psi).value();
  return std::clamp(f.real(), 0.0, 1.0);
}

}  // namespace qdistill
