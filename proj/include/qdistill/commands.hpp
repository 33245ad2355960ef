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

#include <optional>
#include <string>

#include "qdistill/csv.hpp"
#include "qdistill/dynamics.hpp"
#include "qdistill/protocol.hpp"

namespace qdistill {

/// Flags shared by all CLI commands. Times are plain t; with the default
/// gamma = 1 the tau columns coincide with t. Optional fields resolve to
/// per-command defaults (fig3 and audit run at nbar = 0.001 unless told
/// otherwise, everything else at 0; dt defaults to default_rk4_dt).
struct RunConfig {
  double gamma = 1.0;
  std::optional<double> nbar;
  double t_max = 5.0;
  int points = 200;
  std::optional<double> p1;  // rank-2 input weight for distill/classify
  AcceptPolicy policy = AcceptPolicy::BothPMMP;
  NotTarget not_target = NotTarget::Source;
  bool final_sz = false;
  std::optional<double> dt;
};

/// Rejects out-of-range flags before any computation starts.
/// Throws std::invalid_argument describing the offending flag.
void validate_config(const RunConfig& cfg);

/// Initial vs distilled concurrence for the rank-2 family under the
/// keep-both policy, columns (p1, c_initial, c_distilled). Every closed-form
/// value is checked against the exact simulation to 1e-10 before it is
/// emitted; a mismatch aborts the command.
CsvTable cmd_fig1(const RunConfig& cfg);

/// Success probabilities for the two policies, columns
/// (p1, p_strict, p_both), cross-checked like fig1.
CsvTable cmd_fig2(const RunConfig& cfg);

/// Thermal-bath distillation sweep, columns
/// (tau, c_undistilled, c_distilled, p_success, c1_paper, c2_paper).
/// The protocol here is the singlet-recovery round: NOT on the ancilla,
/// accept +- only, final S_z. The last two columns are the closed-form
/// shortcut values kept for comparison; the simulated columns are the
/// trustworthy ones. One RK4 integration at tmax guards the closed-form
/// solution before anything is emitted.
CsvTable cmd_fig3(const RunConfig& cfg);

/// Closed-form evolution of the singlet, columns
/// (tau, re00, im00, ..., re33, im33, concurrence).
CsvTable cmd_evolve(const RunConfig& cfg);

/// One distillation round, one row per measurement result plus a summary
/// row for the post-selected state. Source and ancilla copies are
/// rank2_state(p1) when --p1 is given, otherwise the bath-evolved singlet at
/// t = tmax.
CsvTable cmd_distill(const RunConfig& cfg);

/// Family/verdict/witness table over representative states of every
/// recognized class, columns (state, family, verdict, witness_found).
CsvTable cmd_classify(const RunConfig& cfg);

/// Plain-text report comparing the closed-form shortcuts (c1, success
/// probability, c2) against exact simulation, plus the RK4 cross-check of
/// the closed-form solutions. Divergence is the report's subject, not a
/// failure: the command succeeds either way.
std::string cmd_audit(const RunConfig& cfg);

}  // namespace qdistill
