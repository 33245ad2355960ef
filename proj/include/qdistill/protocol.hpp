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

#include <array>
#include <optional>
#include <vector>

#include "qdistill/states.hpp"

namespace qdistill {

// One distillation round works on two copies of a two-qubit state. The joint
// 16-dimensional space is ordered (A_source, B_source, A_ancilla, B_ancilla),
// so local operations factor as plain tensor products with no permutations.
//
// Gate conventions, fixed once for the whole library:
//  - NOT is sigma_x on Alice's qubit of the targeted copy. It maps
//    |++> to |-+>, Phi+ to Psi+, Phi- to (-)Psi-.
//  - CNOT treats |-> as the active control value (NOT excites |+> to |->, so
//    |-> is logical 1). The target qubit flips when its control is |->.
//    Under the opposite convention the +- measurement result would pick up
//    weight from the unentangled branches and the conditional source state
//    would no longer be a Bell state; a regression test pins this down.
//  - S_z is sigma_z on Alice's source qubit: |+> fixed, |-> negated, which
//    turns Phi+ into the singlet Phi-.

/// Ancilla measurement result in the computational basis, Alice's qubit
/// first (P = +, M = -). The numeric value indexes the ancilla basis state.
enum class Outcome { PP = 0, PM = 1, MP = 2, MM = 3 };

inline constexpr std::array<Outcome, 4> kAllOutcomes = {
    Outcome::PP, Outcome::PM, Outcome::MP, Outcome::MM};

const char* to_string(Outcome o);

enum class NotTarget { Source, Ancilla };

/// Closed-form post-selection policies for the rank-2 family: keep only the
/// +- result, or keep +- and -+.
enum class AcceptPolicy { StrictPM, BothPMMP };

struct ProtocolConfig {
  NotTarget not_target = NotTarget::Source;
  std::vector<Outcome> accepted;  // must be nonempty
  bool final_sz = false;          // Alice's sigma_z on accepted sources
};

struct OutcomeResult {
  double probability = 0.0;
  /// Conditional source state given this outcome. Empty when the outcome
  /// probability is below tol::kDegenerateOutcome and renormalization is
  /// undefined.
  std::optional<DensityMatrix> source;
};

struct ProtocolResult {
  std::array<OutcomeResult, 4> outcomes;  // indexed by Outcome
  double accepted_probability = 0.0;
  DensityMatrix distilled;  // mixture over accepted outcomes, renormalized
  double distilled_concurrence = 0.0;

  const OutcomeResult& outcome(Outcome o) const {
    return outcomes[static_cast<int>(o)];
  }
};

/// (sx x 1) rho (sx x 1): Alice flips her qubit.
DensityMatrix unilateral_not(const DensityMatrix& rho);

/// (sz x 1) rho (sz x 1).
DensityMatrix sz_rotation(const DensityMatrix& rho);

/// Both observers apply CNOT from their source qubit onto their ancilla
/// qubit. Input and output are 16x16 density matrices in the joint ordering
/// above; anything of a different dimension is rejected.
MatrixX bilateral_cnot(const MatrixX& joint);

/// Projective measurement of the ancilla pair in the computational basis:
/// probability and conditional source state (ancilla traced out) for each of
/// the four results.
std::array<OutcomeResult, 4> measure_ancilla(const MatrixX& joint);

/// One full round: NOT on the configured copy, bilateral CNOT, ancilla
/// measurement, post-selection on cfg.accepted, and optionally Alice's S_z on
/// each accepted conditional state. Throws std::runtime_error when the
/// accepted set carries no probability.
ProtocolResult run_protocol(const DensityMatrix& source,
                            const DensityMatrix& ancilla,
                            const ProtocolConfig& cfg);

struct Rank2Prediction {
  double probability = 0.0;
  double concurrence = 0.0;
};

/// Closed-form success probability and distilled concurrence for a rank-2
/// input with weight p1 on Phi+:
///   StrictPM:  (p1^2/2, 1)
///   BothPMMP:  ((1-p1)^2 + p1^2, p1^2 / ((1-p1)^2 + p1^2))
Rank2Prediction predicted_rank2(double p1, AcceptPolicy policy);

}  // namespace qdistill
