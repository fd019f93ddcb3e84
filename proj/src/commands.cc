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

#include "natset/commands.h"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "natset/data.h"
#include "natset/dynamics.h"
#include "natset/errors.h"
#include "natset/natset.h"
#include "natset/svg.h"
#include "natset/synthetic.h"

namespace natset {
namespace {

namespace fs = std::filesystem;

void WriteText(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidArgument("cannot open " + path.string());
  file << text;
  if (!file) throw InvalidArgument("failed writing " + path.string());
}

std::string ReadText(const fs::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InvalidArgument("cannot open " + path.string());
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

// Runs `body` while translating the error hierarchy into exit codes. `stage`
// is updated by the body so messages say where things went wrong.
int Guarded(std::ostream& err, std::string& stage,
            const std::function<void()>& body) {
  auto report = [&](const char* kind, const std::exception& e) {
    err << "error [" << stage << "] " << kind << ": " << e.what() << "\n";
  };
  try {
    body();
    return kExitOk;
  } catch (const ParseError& e) {
    report("ParseError", e);
  } catch (const GapError& e) {
    report("GapError", e);
  } catch (const EmptyTask& e) {
    report("EmptyTask", e);
    return kExitNoData;
  } catch (const InsufficientData& e) {
    report("InsufficientData", e);
    return kExitNoData;
  } catch (const InitialStateOutsideTube& e) {
    report("InitialStateOutsideTube", e);
    return kExitInitialOutside;
  } catch (const SolverFailure& e) {
    report("SolverFailure", e);
    return kExitSolverFailure;
  } catch (const std::exception& e) {
    report("InvalidInput", e);
  }
  return kExitInvalidInput;
}

Trajectory CandidateToTrajectory(const CandidateTrajectory& candidate) {
  Trajectory traj;
  traj.actor_id = "candidate";
  traj.frame_rate = 1.0 / candidate.dt;
  for (const StateVec& s : candidate.states) {
    RawActorState raw;
    raw.position = {s.px, s.py};
    raw.velocity = {s.vx, s.vy};
    traj.states.push_back(raw);
  }
  return traj;
}

}  // namespace

DynamicsSpec ParseDynamicsSpec(const std::string& text) {
  DynamicsSpec spec;
  bool have_dt = false;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw InvalidArgument("--dyn expects key=value pairs, got '" + item +
                            "'");
    }
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (value.empty() || *end != '\0') {
      throw InvalidArgument("--dyn: '" + value + "' is not a number");
    }
    if (key == "dt") {
      spec.dt = v;
      have_dt = true;
    } else if (key == "mass") {
      spec.mass = v;
    } else {
      throw InvalidArgument("--dyn: unknown key '" + key + "'");
    }
  }
  if (!have_dt) throw InvalidArgument("--dyn requires dt=<seconds>");
  if (!(spec.dt > 0.0) || !(spec.mass > 0.0)) {
    throw InvalidArgument("--dyn: dt and mass must be positive");
  }
  return spec;
}

int RunBuild(const BuildCommand& cmd, std::ostream& out, std::ostream& err) {
  std::string stage = "task";
  return Guarded(err, stage, [&] {
    if (cmd.trim < 0) throw InvalidArgument("--trim must be non-negative");
    const TaskConfig config = LoadTaskConfig(cmd.task);
    stage = "tracks";
    const std::vector<Trajectory> trajectories =
        LoadTrajectories(cmd.tracks, config.frame_rate);
    stage = "filter";
    const TaskDataset dataset = FilterTask(trajectories, config.task);
    stage = "build";
    NaturalisticSet natset =
        BuildNatset(dataset, HullTransform::Position(), {cmd.trim});
    nlohmann::json provenance;
    provenance["tracks"] = cmd.tracks.filename().string();
    provenance["task"] = cmd.task.filename().string();
    provenance["trajectories"] = dataset.trajectories.size();
    provenance["trim"] = cmd.trim;
    natset.provenance = provenance.dump();
    stage = "write";
    WriteNatset(natset, cmd.out);

    out << "m = " << dataset.trajectories.size() << " of "
        << trajectories.size() << " trajectories\n";
    out << "H = " << natset.horizon() << "\n";
    out << "t support area vertices\n";
    for (const HullStats& s : NatsetStats(natset)) {
      out << s.t << ' ' << s.support << ' ' << std::setprecision(6) << s.area
          << ' ' << s.vertex_count << "\n";
    }
  });
}

int RunProject(const ProjectCommand& cmd, std::ostream& out,
               std::ostream& err) {
  std::string stage = "natset";
  return Guarded(err, stage, [&] {
    const NaturalisticSet natset = ReadNatset(cmd.natset);
    stage = "dynamics";
    const LinearDynamics dyn =
        DoubleIntegrator(cmd.dynamics.dt, cmd.dynamics.mass);
    stage = "candidate";
    const std::vector<Trajectory> tracks =
        LoadTrajectories(cmd.candidate, 1.0 / cmd.dynamics.dt);
    if (tracks.empty()) {
      throw InvalidArgument("candidate file holds no trajectory");
    }
    CandidateTrajectory candidate = CandidateFromTrajectory(tracks.front());
    candidate.dt = cmd.dynamics.dt;
    stage = "project";
    const ProjectionResult result =
        Project(candidate, natset, dyn, cmd.options);
    stage = "write";
    WriteText(cmd.out, ProjectionToJson(result, candidate));
    out << "status " << ToString(result.status) << ", objective "
        << std::setprecision(10) << result.objective << ", "
        << result.iterations << " iterations\n";
  });
}

int RunGen(const GenCommand& cmd, std::ostream& out, std::ostream& err) {
  std::string stage = "arguments";
  return Guarded(err, stage, [&] {
    const auto kind = ParseScenarioKind(cmd.kind);
    if (!kind) throw InvalidArgument("unknown scenario kind '" + cmd.kind + "'");
    ScenarioSpec spec = DefaultScenario(*kind);
    spec.count = cmd.count;
    spec.seed = cmd.seed;
    stage = "generate";
    const Scenario scenario = GenerateScenario(spec);
    stage = "write";
    fs::create_directories(cmd.out_dir);
    WriteText(cmd.out_dir / "tracks.csv",
              TrajectoriesToCsv(scenario.trajectories));
    WriteText(cmd.out_dir / "task.json", TaskConfigToJson(scenario.task));
    out << "wrote " << scenario.trajectories.size() << " trajectories to "
        << (cmd.out_dir / "tracks.csv").string() << "\n";
    if (*kind == ScenarioKind::kCurvedRoad) {
      const CandidateTrajectory candidate =
          StraightLineCandidate(scenario.trajectories, spec.horizon, spec.dt);
      WriteText(cmd.out_dir / "candidate.csv",
                TrajectoriesToCsv({CandidateToTrajectory(candidate)}));
      out << "wrote straight-line candidate to "
          << (cmd.out_dir / "candidate.csv").string() << "\n";
    }
  });
}

int RunExportSvg(const ExportSvgCommand& cmd, std::ostream& out,
                 std::ostream& err) {
  std::string stage = "natset";
  return Guarded(err, stage, [&] {
    const NaturalisticSet natset = ReadNatset(cmd.natset);
    std::optional<PathOverlay> overlay;
    if (cmd.projection) {
      stage = "projection";
      overlay = OverlayFromProjectionJson(ReadText(*cmd.projection));
    }
    stage = "write";
    WriteText(cmd.out, RenderSvg(natset, overlay));
    out << "wrote " << cmd.out.string() << "\n";
  });
}

}  // namespace natset
