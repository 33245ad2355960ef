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

#include <vector>

#include "qdistill/linalg.hpp"

namespace qdistill {

// Two-qubit basis order is (|++>, |+->, |-+>, |-->) throughout, with |+> the
// excited level (computational 0) and |-> the ground level (computational 1).
// Alice owns the first tensor factor.

/// Computational basis ket, index in [0, 4).
Vector4 basis_ket(int index);

enum class BellState { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

/// Phi+- = (|+-> +- |-+>)/sqrt(2), Psi+- = (|++> +- |-->)/sqrt(2).
/// PhiMinus is the singlet.
Vector4 bell_vector(BellState s);

const char* to_string(BellState s);

/// A validated two-qubit density matrix: Hermitian, unit trace and PSD within
/// the shared tolerances. Construction is the validation gate; every function
/// in the library that hands one out has already paid for the check.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Matrix4& m);

  const Matrix4& matrix() const { return m_; }

  static DensityMatrix maximally_mixed();

 private:
  Matrix4 m_;
};

struct WeightedPureState {
  double probability = 0.0;
  Vector4 state;
};

/// An explicit convex decomposition {(p_i, |psi_i>)}. All weights must be
/// strictly positive and sum to one: a component with zero weight is not part
/// of the decomposition, and reweighting (see classify) must keep every
/// component alive.
class PureStateMixture {
 public:
  explicit PureStateMixture(std::vector<WeightedPureState> components);

  const std::vector<WeightedPureState>& components() const {
    return components_;
  }
  std::size_t size() const { return components_.size(); }

 private:
  std::vector<WeightedPureState> components_;
};

/// Entries of the non-diagonal two-qubit family
///   rho = 1/2 [[b+c, 0,   0,   0],
///              [0,   a-b, d,   0],
///              [0,   d,   a-c, 0],
///              [0,   0,   0,   0]]
/// with b+c >= 0, a-b >= 0, a-c >= 0 and (b+c)/2 + (a-b)/2 + (a-c)/2 = 1.
struct NonDiagonalParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
};

DensityMatrix from_mixture(const PureStateMixture& mix);

/// (1-p1)|++><++| + p1 |Phi+><Phi+| for p1 in (0,1). Concurrence equals p1.
DensityMatrix rank2_state(double p1);

DensityMatrix nondiagonal_state(const NonDiagonalParams& p);

/// Wootters concurrence, computed on the Hermitian route: the singular values
/// lambda_i are the eigenvalues of sqrt(sqrt(rho) rho~ sqrt(rho)) with
/// rho~ = (sy x sy) conj(rho) (sy x sy), and C = max{0, l1 - l2 - l3 - l4}.
double concurrence(const DensityMatrix& rho);

/// Partial transpose over the second qubit.
Matrix4 partial_transpose(const Matrix4& m);

/// Peres-Horodecki criterion; necessary and sufficient for 2x2 systems.
bool ppt_is_separable(const DensityMatrix& rho);

/// <psi|rho|psi> for a unit vector psi.
double fidelity_with_pure(const DensityMatrix& rho, const Vector4& psi);

}  // namespace qdistill
