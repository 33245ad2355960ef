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

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "qdistill/commands.hpp"

namespace {

using qdistill::RunConfig;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open output path: " + path);
  }
  file << content;
  if (!file) {
    throw std::runtime_error("failed while writing: " + path);
  }
}

CLI::App* make_command(CLI::App& app, const std::string& name,
                       const std::string& description, RunConfig& cfg,
                       std::string& out_path) {
  CLI::App* cmd = app.add_subcommand(name, description);
  cmd->add_option("--gamma", cfg.gamma, "decay rate (default 1)");
  cmd->add_option("--nbar", cfg.nbar,
                  "mean thermal photon number (default 0; fig3/audit use "
                  "0.001 unless set)");
  cmd->add_option("--tmax", cfg.t_max, "time horizon, or the single evolution "
                                       "time for distill (default 5)");
  cmd->add_option("--points", cfg.points, "grid size (default 200)");
  cmd->add_option("--p1", cfg.p1, "rank-2 input weight in (0,1)");
  const std::map<std::string, qdistill::AcceptPolicy> policies{
      {"strict-pm", qdistill::AcceptPolicy::StrictPM},
      {"both", qdistill::AcceptPolicy::BothPMMP}};
  cmd->add_option("--policy", cfg.policy, "accepted results: strict-pm | both")
      ->transform(CLI::CheckedTransformer(policies, CLI::ignore_case));
  const std::map<std::string, qdistill::NotTarget> targets{
      {"source", qdistill::NotTarget::Source},
      {"ancilla", qdistill::NotTarget::Ancilla}};
  cmd->add_option("--not", cfg.not_target, "copy receiving Alice's NOT: "
                                           "source | ancilla")
      ->transform(CLI::CheckedTransformer(targets, CLI::ignore_case));
  cmd->add_flag("--sz", cfg.final_sz, "apply Alice's S_z to accepted states");
  cmd->add_option("--dt", cfg.dt, "integrator step (default auto)");
  cmd->add_option("--out", out_path, "output file (default standard output)");
  return cmd;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qdistill: two-qubit entanglement distillation and open-system "
      "evolution"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string out_path;
  std::map<std::string, std::function<std::string(const RunConfig&)>> actions;

  make_command(app, "fig1",
               "initial vs distilled concurrence for the rank-2 family", cfg,
               out_path);
  actions["fig1"] = [](const RunConfig& c) {
    return qdistill::to_csv(qdistill::cmd_fig1(c));
  };
  make_command(app, "fig2", "success probability for the two policies", cfg,
               out_path);
  actions["fig2"] = [](const RunConfig& c) {
    return qdistill::to_csv(qdistill::cmd_fig2(c));
  };
  make_command(app, "fig3", "thermal-bath distillation sweep", cfg, out_path);
  actions["fig3"] = [](const RunConfig& c) {
    return qdistill::to_csv(qdistill::cmd_fig3(c));
  };
  make_command(app, "evolve", "closed-form evolution of the singlet", cfg,
               out_path);
  actions["evolve"] = [](const RunConfig& c) {
    return qdistill::to_csv(qdistill::cmd_evolve(c));
  };
  make_command(app, "distill", "one distillation round", cfg, out_path);
  actions["distill"] = [](const RunConfig& c) {
    return qdistill::to_csv(qdistill::cmd_distill(c));
  };
  make_command(app, "classify", "family and separability table", cfg,
               out_path);
  actions["classify"] = [](const RunConfig& c) {
    return qdistill::to_csv(qdistill::cmd_classify(c));
  };
  make_command(app, "audit",
               "closed-form shortcuts vs exact simulation report", cfg,
               out_path);
  actions["audit"] = [](const RunConfig& c) { return qdistill::cmd_audit(c); };

  CLI11_PARSE(app, argc, argv);

  try {
    const std::string command = app.get_subcommands().front()->get_name();
    write_output(out_path, actions.at(command)(cfg));
  } catch (const std::invalid_argument& err) {
    std::cerr << "usage error: " << err.what() << "\n";
    return 2;
  } catch (const std::domain_error& err) {
    std::cerr << "usage error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
