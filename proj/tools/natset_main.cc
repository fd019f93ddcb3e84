// Copyright 2026 The Natset Authors
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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "natset/commands.h"
#include "natset/errors.h"

int main(int argc, char** argv) {
  using namespace natset;

  CLI::App app{"Naturalistic reachable sets from driving data"};
  app.require_subcommand(1);

  BuildCommand build;
  auto* build_cmd = app.add_subcommand("build", "Build a natset from tracks");
  build_cmd->add_option("--tracks", build.tracks, "Tracks CSV")->required();
  build_cmd->add_option("--task", build.task, "Task JSON")->required();
  build_cmd->add_option("--out", build.out, "Output natset JSON")->required();
  build_cmd->add_option("--trim", build.trim,
                        "Drop the k most isolated points per slice");

  ProjectCommand project;
  std::string dyn_text;
  double velocity_weight = 1.0;
  auto* project_cmd =
      app.add_subcommand("project", "Project a candidate onto a natset");
  project_cmd->add_option("--natset", project.natset, "Natset JSON")
      ->required();
  project_cmd->add_option("--candidate", project.candidate, "Candidate CSV")
      ->required();
  project_cmd->add_option("--dyn", dyn_text, "dt=<s>,mass=<kg>")->required();
  project_cmd->add_option("--out", project.out, "Output projection JSON")
      ->required();
  project_cmd->add_flag("--relax-initial", project.options.relax_initial,
                        "Allow an initial state outside W_0");
  project_cmd->add_option("--velocity-weight", velocity_weight,
                          "Weight of velocity errors in the objective");
  project_cmd->add_option("--max-iter", project.options.solver.max_iter);
  project_cmd->add_option("--eps-abs", project.options.solver.eps_abs);
  project_cmd->add_option("--eps-rel", project.options.solver.eps_rel);
  project_cmd->add_option("--rho", project.options.solver.rho);

  GenCommand gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic scenario");
  gen_cmd->add_option("--kind", gen.kind,
                      "curved_road or straight_road_with_stop");
  gen_cmd->add_option("--count", gen.count, "Number of trajectories");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--out-dir", gen.out_dir, "Output directory")
      ->required();

  ExportSvgCommand svg;
  std::string projection_path;
  auto* svg_cmd = app.add_subcommand("export-svg", "Render a natset as SVG");
  svg_cmd->add_option("--natset", svg.natset, "Natset JSON")->required();
  svg_cmd->add_option("--projection", projection_path, "Projection JSON");
  svg_cmd->add_option("--out", svg.out, "Output SVG")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  if (*build_cmd) return RunBuild(build, std::cout, std::cerr);
  if (*project_cmd) {
    try {
      project.dynamics = ParseDynamicsSpec(dyn_text);
    } catch (const Error& e) {
      std::cerr << "error [arguments]: " << e.what() << "\n";
      return kExitInvalidInput;
    }
    project.options.state_weights << 1.0, velocity_weight, 1.0,
        velocity_weight;
    return RunProject(project, std::cout, std::cerr);
  }
  if (*gen_cmd) return RunGen(gen, std::cout, std::cerr);
  if (!projection_path.empty()) svg.projection = projection_path;
  return RunExportSvg(svg, std::cout, std::cerr);
}
