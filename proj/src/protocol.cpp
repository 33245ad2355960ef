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

#include "qdistill/protocol.hpp"

#include <cmath>
#include <string>

namespace qdistill {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::PP:
      return "pp";
    case Outcome::PM:
      return "pm";
    case Outcome::MP:
      return "mp";
    case Outcome::MM:
      return "mm";
  }
  return "?";
}

namespace {

Matrix4 conjugate_by(const Matrix4& rho, const Matrix4& u) {
  return u * rho * u.adjoint();
}

Matrix4 not_on_alice() {
  return Matrix4(tensor(pauli_x(), identity2()));
}

Matrix4 sz_on_alice() {
  return Matrix4(tensor(pauli_z(), identity2()));
}

// CNOT(A_s -> A_a) . CNOT(B_s -> B_a) as a 16x16 permutation. Bit layout of
// a joint index: (A_s B_s A_a B_a) from most to least significant, with
// |+> = 0 and |-> = 1. A target flips when its control bit is 1 (= |->).
const MatrixX& bilateral_cnot_unitary() {
  static const MatrixX u = [] {
    MatrixX m = MatrixX::Zero(16, 16);
    for (int i = 0; i < 16; ++i) {
      int j = i;
      if (i & 8) j ^= 2;  // A_s controls A_a
      if (i & 4) j ^= 1;  // B_s controls B_a
      m(j, i) = 1.0;
    }
    return m;
  }();
  return u;
}

struct ProjectedOutcome {
  double probability = 0.0;
  Matrix4 block;  // unnormalized conditional source
};

std::array<ProjectedOutcome, 4> project_outcomes(const MatrixX& joint) {
  std::array<ProjectedOutcome, 4> out;
  for (int o = 0; o < 4; ++o) {
    Matrix4 block;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        block(i, j) = joint(4 * i + o, 4 * j + o);
      }
    }
    out[o] = ProjectedOutcome{block.trace().real(), block};
  }
  return out;
}

void require_joint(const MatrixX& joint, const char* who) {
  if (joint.rows() != 16 || joint.cols() != 16) {
    throw std::invalid_argument(std::string(who) +
                                ": expected a 16x16 joint state, got " +
                                std::to_string(joint.rows()) + "x" +
                                std::to_string(joint.cols()));
  }
}

}  // namespace

DensityMatrix unilateral_not(const DensityMatrix& rho) {
  return DensityMatrix(conjugate_by(rho.matrix(), not_on_alice()));
}

DensityMatrix sz_rotation(const DensityMatrix& rho) {
  return DensityMatrix(conjugate_by(rho.matrix(), sz_on_alice()));
}

MatrixX bilateral_cnot(const MatrixX& joint) {
  require_joint(joint, "bilateral_cnot");
  const MatrixX& u = bilateral_cnot_unitary();
  return u * joint * u.transpose();
}

std::array<OutcomeResult, 4> measure_ancilla(const MatrixX& joint) {
  require_joint(joint, "measure_ancilla");
  if (hermiticity_defect(joint) > tol::kHermitian ||
      std::abs(joint.trace() - Complex(1.0)) > tol::kTrace) {
    throw std::invalid_argument("measure_ancilla: joint state is not valid");
  }
  const auto projected = project_outcomes(joint);
  std::array<OutcomeResult, 4> results;
  for (int o = 0; o < 4; ++o) {
    results[o].probability = projected[o].probability;
    if (projected[o].probability >= tol::kDegenerateOutcome) {
      results[o].source =
          DensityMatrix(projected[o].block / projected[o].probability);
    }
  }
  return results;
}

ProtocolResult run_protocol(const DensityMatrix& source,
                            const DensityMatrix& ancilla,
                            const ProtocolConfig& cfg) {
  if (cfg.accepted.empty()) {
    throw std::invalid_argument("run_protocol: accepted set must be nonempty");
  }
  const DensityMatrix src = cfg.not_target == NotTarget::Source
                                ? unilateral_not(source)
                                : source;
  const DensityMatrix anc = cfg.not_target == NotTarget::Ancilla
                                ? unilateral_not(ancilla)
                                : ancilla;
  const MatrixX joint = bilateral_cnot(tensor(src.matrix(), anc.matrix()));
  const auto projected = project_outcomes(joint);

  double total = 0.0;
  for (const auto& p : projected) total += p.probability;
  if (std::abs(total - 1.0) > tol::kProbabilitySum) {
    throw std::runtime_error(
        "run_protocol: outcome probabilities sum to " + std::to_string(total));
  }

  bool accepted_flag[4] = {false, false, false, false};
  for (const Outcome o : cfg.accepted) accepted_flag[static_cast<int>(o)] = true;

  double accepted_probability = 0.0;
  Matrix4 accepted_block = Matrix4::Zero();
  for (int o = 0; o < 4; ++o) {
    if (!accepted_flag[o]) continue;
    accepted_probability += projected[o].probability;
    accepted_block += cfg.final_sz
                          ? conjugate_by(projected[o].block, sz_on_alice())
                          : projected[o].block;
  }
  if (accepted_probability < tol::kDegenerateOutcome) {
    throw std::runtime_error(
        "run_protocol: accepted outcomes carry no probability (" +
        std::to_string(accepted_probability) + ")");
  }

  std::array<OutcomeResult, 4> outcomes;
  for (int o = 0; o < 4; ++o) {
    outcomes[o].probability = projected[o].probability;
    if (projected[o].probability >= tol::kDegenerateOutcome) {
      Matrix4 conditional = projected[o].block / projected[o].probability;
      if (accepted_flag[o] && cfg.final_sz) {
        conditional = conjugate_by(conditional, sz_on_alice());
      }
      outcomes[o].source = DensityMatrix(conditional);
    }
  }

  DensityMatrix distilled(accepted_block / accepted_probability);
  const double c = concurrence(distilled);
  return ProtocolResult{outcomes, accepted_probability, distilled, c};
}

Rank2Prediction predicted_rank2(double p1, AcceptPolicy policy) {
  if (policy == AcceptPolicy::StrictPM) {
    return Rank2Prediction{p1 * p1 / 2.0, 1.0};
  }
  const double p_success = (1.0 - p1) * (1.0 - p1) + p1 * p1;
  return Rank2Prediction{p_success, p1 * p1 / p_success};
}

}  // namespace qdistill
