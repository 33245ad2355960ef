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

#include "qdistill/commands.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "qdistill/classify.hpp"

namespace qdistill {

namespace {

constexpr double kCrossCheck = 1e-10;       // formula vs simulation gate
constexpr double kRk4VacuumGate = 1e-8;     // RK4 vs closed form, nbar = 0
constexpr double kRk4ThermalGate = 1e-6;    // RK4 vs closed form, nbar > 0

double resolved_nbar(const RunConfig& cfg, double command_default) {
  return cfg.nbar.value_or(command_default);
}

std::vector<double> p1_grid(int points) {
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) {
    grid[i] = static_cast<double>(i + 1) / (points + 1);
  }
  return grid;
}

std::vector<double> time_grid(double t_max, int points) {
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) {
    grid[i] = t_max * i / (points - 1);
  }
  return grid;
}

void cross_check(double formula, double simulated, const std::string& what) {
  if (std::abs(formula - simulated) > kCrossCheck) {
    throw std::runtime_error(
        "cross-check failed for " + what + ": formula " +
        format_number(formula) + " vs simulation " + format_number(simulated));
  }
}

ProtocolConfig rank2_protocol(AcceptPolicy policy) {
  ProtocolConfig cfg;
  cfg.not_target = NotTarget::Source;
  cfg.accepted = policy == AcceptPolicy::StrictPM
                     ? std::vector<Outcome>{Outcome::PM}
                     : std::vector<Outcome>{Outcome::PM, Outcome::MP};
  cfg.final_sz = false;
  return cfg;
}

// The singlet-recovery round used for the bath-evolved states: NOT on the
// ancilla, keep +- only, rotate the source back onto the singlet.
ProtocolConfig singlet_recovery_protocol() {
  ProtocolConfig cfg;
  cfg.not_target = NotTarget::Ancilla;
  cfg.accepted = {Outcome::PM};
  cfg.final_sz = true;
  return cfg;
}

DensityMatrix singlet() {
  return from_mixture(
      PureStateMixture{{{1.0, bell_vector(BellState::PhiMinus)}}});
}

double max_entry_difference(const Matrix4& a, const Matrix4& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// One integrator run against the closed-form solution; returns the max-entry
// difference and throws when it exceeds the gate for that bath.
double rk4_guard(const RunConfig& cfg, const BathParams& bath) {
  const double dt = cfg.dt.value_or(default_rk4_dt(bath));
  const DensityMatrix numeric = integrate_rk4(singlet(), bath, cfg.t_max, dt);
  const DensityMatrix closed = thermal_solution(cfg.t_max, bath);
  const double err = max_entry_difference(numeric.matrix(), closed.matrix());
  const double gate = bath.nbar == 0.0 ? kRk4VacuumGate : kRk4ThermalGate;
  if (err > gate) {
    throw std::runtime_error(
        "closed-form solution disagrees with the RK4 integrator by " +
        format_number(err) + " (gate " + format_number(gate) +
        ") at t = " + format_number(cfg.t_max));
  }
  return err;
}

}  // namespace

void validate_config(const RunConfig& cfg) {
  if (!(cfg.gamma > 0.0) || !std::isfinite(cfg.gamma)) {
    throw std::invalid_argument("--gamma must be a positive number");
  }
  if (cfg.nbar && (!(*cfg.nbar >= 0.0) || !std::isfinite(*cfg.nbar))) {
    throw std::invalid_argument("--nbar must be a nonnegative number");
  }
  if (!(cfg.t_max > 0.0) || !std::isfinite(cfg.t_max)) {
    throw std::invalid_argument("--tmax must be a positive number");
  }
  if (cfg.points < 2) {
    throw std::invalid_argument("--points must be at least 2");
  }
  if (cfg.p1 && !(*cfg.p1 > 0.0 && *cfg.p1 < 1.0)) {
    throw std::invalid_argument("--p1 must lie strictly inside (0,1)");
  }
  if (cfg.dt && (!(*cfg.dt > 0.0) || !std::isfinite(*cfg.dt))) {
    throw std::invalid_argument("--dt must be a positive number");
  }
}

CsvTable cmd_fig1(const RunConfig& cfg) {
  validate_config(cfg);
  CsvTable table;
  table.header = {"p1", "c_initial", "c_distilled"};
  for (const double p1 : p1_grid(cfg.points)) {
    const DensityMatrix input = rank2_state(p1);
    cross_check(p1, concurrence(input), "c_initial at p1=" + format_number(p1));
    const Rank2Prediction predicted =
        predicted_rank2(p1, AcceptPolicy::BothPMMP);
    const ProtocolResult simulated =
        run_protocol(input, input, rank2_protocol(AcceptPolicy::BothPMMP));
    cross_check(predicted.concurrence, simulated.distilled_concurrence,
                "c_distilled at p1=" + format_number(p1));
    table.rows.push_back({format_number(p1), format_number(p1),
                          format_number(predicted.concurrence)});
  }
  return table;
}

CsvTable cmd_fig2(const RunConfig& cfg) {
  validate_config(cfg);
  CsvTable table;
  table.header = {"p1", "p_strict", "p_both"};
  for (const double p1 : p1_grid(cfg.points)) {
    const DensityMatrix input = rank2_state(p1);
    const Rank2Prediction strict = predicted_rank2(p1, AcceptPolicy::StrictPM);
    const Rank2Prediction both = predicted_rank2(p1, AcceptPolicy::BothPMMP);
    cross_check(strict.probability,
                run_protocol(input, input, rank2_protocol(AcceptPolicy::StrictPM))
                    .accepted_probability,
                "p_strict at p1=" + format_number(p1));
    cross_check(both.probability,
                run_protocol(input, input, rank2_protocol(AcceptPolicy::BothPMMP))
                    .accepted_probability,
                "p_both at p1=" + format_number(p1));
    table.rows.push_back({format_number(p1), format_number(strict.probability),
                          format_number(both.probability)});
  }
  return table;
}

CsvTable cmd_fig3(const RunConfig& cfg) {
  validate_config(cfg);
  const BathParams bath{cfg.gamma, resolved_nbar(cfg, 0.001)};
  rk4_guard(cfg, bath);

  CsvTable table;
  table.header = {"tau",       "c_undistilled", "c_distilled",
                  "p_success", "c1_paper",      "c2_paper"};
  for (const double t : time_grid(cfg.t_max, cfg.points)) {
    const DensityMatrix rho = thermal_solution(t, bath);
    const ProtocolResult result =
        run_protocol(rho, rho, singlet_recovery_protocol());
    const DistilledClosedForms forms = closed_form_distilled(t, bath);
    table.rows.push_back({
        format_number(bath.gamma * t),
        format_number(concurrence(rho)),
        format_number(result.distilled_concurrence),
        format_number(result.accepted_probability),
        format_number(closed_form_c1(t, bath)),
        format_number(std::max(0.0, forms.c2)),
    });
  }
  return table;
}

CsvTable cmd_evolve(const RunConfig& cfg) {
  validate_config(cfg);
  const BathParams bath{cfg.gamma, resolved_nbar(cfg, 0.0)};

  CsvTable table;
  table.header = {"tau"};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const std::string ij = std::to_string(i) + std::to_string(j);
      table.header.push_back("re" + ij);
      table.header.push_back("im" + ij);
    }
  }
  table.header.push_back("concurrence");

  for (const double t : time_grid(cfg.t_max, cfg.points)) {
    const DensityMatrix rho = thermal_solution(t, bath);
    std::vector<std::string> row{format_number(bath.gamma * t)};
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        row.push_back(format_number(rho.matrix()(i, j).real()));
        row.push_back(format_number(rho.matrix()(i, j).imag()));
      }
    }
    row.push_back(format_number(concurrence(rho)));
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

struct NearestBell {
  BellState state = BellState::PhiPlus;
  double fidelity = 0.0;
};

NearestBell nearest_bell(const DensityMatrix& rho) {
  NearestBell best;
  for (const BellState s : {BellState::PhiPlus, BellState::PhiMinus,
                            BellState::PsiPlus, BellState::PsiMinus}) {
    const double f = fidelity_with_pure(rho, bell_vector(s));
    if (f > best.fidelity) best = NearestBell{s, f};
  }
  return best;
}

std::vector<std::string> outcome_row(const std::string& label, double prob,
                                     const std::optional<DensityMatrix>& rho) {
  if (!rho) {
    return {label, format_number(prob), "-", "-", "-"};
  }
  const NearestBell nb = nearest_bell(*rho);
  return {label, format_number(prob), to_string(nb.state),
          format_number(nb.fidelity), format_number(concurrence(*rho))};
}

}  // namespace

CsvTable cmd_distill(const RunConfig& cfg) {
  validate_config(cfg);
  DensityMatrix input = cfg.p1 ? rank2_state(*cfg.p1)
                               : thermal_solution(cfg.t_max,
                                                  BathParams{cfg.gamma,
                                                             resolved_nbar(cfg, 0.0)});
  ProtocolConfig protocol;
  protocol.not_target = cfg.not_target;
  protocol.accepted = cfg.policy == AcceptPolicy::StrictPM
                          ? std::vector<Outcome>{Outcome::PM}
                          : std::vector<Outcome>{Outcome::PM, Outcome::MP};
  protocol.final_sz = cfg.final_sz;
  const ProtocolResult result = run_protocol(input, input, protocol);

  CsvTable table;
  table.header = {"outcome", "probability", "nearest_bell", "bell_fidelity",
                  "concurrence"};
  for (const Outcome o : kAllOutcomes) {
    const OutcomeResult& r = result.outcome(o);
    table.rows.push_back(outcome_row(to_string(o), r.probability, r.source));
  }
  table.rows.push_back(outcome_row("accepted", result.accepted_probability,
                                   result.distilled));
  return table;
}

CsvTable cmd_classify(const RunConfig& cfg) {
  validate_config(cfg);
  const double p1 = cfg.p1.value_or(0.5);
  const BathParams bath{cfg.gamma, resolved_nbar(cfg, 0.0)};

  std::vector<std::pair<std::string, DensityMatrix>> table_states;
  table_states.emplace_back("rank2(p1=" + format_number(p1) + ")",
                            rank2_state(p1));
  table_states.emplace_back("nondiag(d=0.2)",
                            nondiagonal_state({1.0, 0.5, 0.5, 0.2}));
  table_states.emplace_back("case2", nondiagonal_state({1.0, 1.0, 0.0, 0.0}));
  table_states.emplace_back("case3", nondiagonal_state({1.0, 0.0, 1.0, 0.0}));
  table_states.emplace_back("case4", nondiagonal_state({1.0, 1.0, 1.0, 0.0}));
  table_states.emplace_back(
      "bell-mixture",
      from_mixture(PureStateMixture{{
          {0.4, bell_vector(BellState::PhiPlus)},
          {0.3, bell_vector(BellState::PhiMinus)},
          {0.2, bell_vector(BellState::PsiPlus)},
          {0.1, bell_vector(BellState::PsiMinus)},
      }}));
  table_states.emplace_back("evolved(t=1)", thermal_solution(1.0, bath));

  CsvTable table;
  table.header = {"state", "family", "verdict", "witness_found"};
  for (const auto& [label, rho] : table_states) {
    const FamilyClass fc = classify_family(rho);
    std::string verdict_label = "-";
    std::string witness_label = "-";
    if (fc != FamilyClass::Unclassified) {
      verdict_label = to_string(verdict(fc));
      witness_label = separable_witness(rho, fc) ? "yes" : "none";
    }
    table.rows.push_back({label, to_string(fc), verdict_label, witness_label});
  }
  return table;
}

namespace {

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

std::string cmd_audit(const RunConfig& cfg) {
  validate_config(cfg);
  const BathParams bath{cfg.gamma, resolved_nbar(cfg, 0.001)};
  const double dt = cfg.dt.value_or(default_rk4_dt(bath));

  std::string out;
  out += "closed-form audit\n";
  out += "  gamma = " + format_number(bath.gamma) +
         ", nbar = " + format_number(bath.nbar) +
         ", tmax = " + format_number(cfg.t_max) +
         ", points = " + std::to_string(cfg.points) +
         ", dt = " + format_number(dt) + "\n\n";

  out += "integrator cross-check (max |entry| difference at tmax)\n";
  {
    RunConfig vacuum_cfg = cfg;
    vacuum_cfg.nbar = 0.0;
    const double vacuum_err = rk4_guard(vacuum_cfg, BathParams{cfg.gamma, 0.0});
    out += "  vacuum solution  (nbar = 0):          " +
           format_number(vacuum_err) + "  [gate " +
           format_number(kRk4VacuumGate) + "]\n";
    const double thermal_err = rk4_guard(cfg, bath);
    out += "  thermal solution (nbar = " + format_number(bath.nbar) +
           "):      " + format_number(thermal_err) + "  [gate " +
           format_number(kRk4ThermalGate) + "]\n\n";
  }

  out += "eigenvalue bookkeeping over the time grid\n";
  double worst_sum = 0.0;
  double worst_sum_literal = 0.0;
  for (const double t : time_grid(cfg.t_max, cfg.points)) {
    const DistilledClosedForms f = closed_form_distilled(t, bath);
    worst_sum =
        std::max(worst_sum, std::abs(f.p1 + f.p2 + f.p3 + f.p4 - 1.0));
    // The half-weight reading of the middle eigenvalues, (1-c)/8 +- a/2,
    // fails to sum to one; it is listed to show why it was rejected.
    const ThermalCoeffs k = thermal_coeffs(t, bath);
    const double literal =
        f.p1 + f.p2 + (1.0 - k.c) / 8.0 + k.a / 2.0 + (1.0 - k.c) / 8.0 -
        k.a / 2.0;
    worst_sum_literal = std::max(worst_sum_literal, std::abs(literal - 1.0));
  }
  out += "  adopted grouping (1-c)/4 +- a/2:  max |sum(p_i) - 1| = " +
         format_number(worst_sum) + "\n";
  out += "  half-weight reading (1-c)/8 +- a/2:  max |sum - 1| = " +
         format_number(worst_sum_literal) + "  (rejected)\n\n";

  out += "closed-form shortcuts vs exact simulation\n";
  const std::vector<std::string> headers = {
      "tau",    "c1_form", "c_sim",   "|diff|", "p_form",
      "p_sim",  "|diff|",  "c2_form", "c2_sim", "|diff|"};
  const std::size_t width = 18;
  out += "  ";
  for (const auto& h : headers) out += pad(h, width);
  out += "\n";

  double worst_c1 = 0.0, worst_p = 0.0, worst_c2 = 0.0;
  for (const double t : time_grid(cfg.t_max, cfg.points)) {
    const DensityMatrix rho = thermal_solution(t, bath);
    const ProtocolResult result =
        run_protocol(rho, rho, singlet_recovery_protocol());
    const DistilledClosedForms f = closed_form_distilled(t, bath);

    const double c1_form = closed_form_c1(t, bath);
    const double c_sim = concurrence(rho);
    const double p_form = f.p;
    const double p_sim = result.accepted_probability;
    const double c2_form = std::max(0.0, f.c2);
    const double c2_sim = result.distilled_concurrence;

    worst_c1 = std::max(worst_c1, std::abs(c1_form - c_sim));
    worst_p = std::max(worst_p, std::abs(p_form - p_sim));
    worst_c2 = std::max(worst_c2, std::abs(c2_form - c2_sim));

    const double cells[] = {bath.gamma * t,
                            c1_form,
                            c_sim,
                            std::abs(c1_form - c_sim),
                            p_form,
                            p_sim,
                            std::abs(p_form - p_sim),
                            c2_form,
                            c2_sim,
                            std::abs(c2_form - c2_sim)};
    out += "  ";
    for (const double v : cells) out += pad(format_number(v), width);
    out += "\n";
  }
  out += "\nlargest divergences over the grid\n";
  out += "  concurrence shortcut c1:      " + format_number(worst_c1) + "\n";
  out += "  success probability shortcut: " + format_number(worst_p) + "\n";
  out += "  distilled concurrence c2:     " + format_number(worst_c2) + "\n";
  out += "(shortcut columns are kept verbatim; simulated columns are "
         "authoritative)\n";
  return out;
}

}  // namespace qdistill
