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

// Subcommands of the natset tool. Each returns the process exit code and
// reports problems on `err` instead of throwing.

#ifndef NATSET_COMMANDS_H_
#define NATSET_COMMANDS_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "natset/projection.h"

namespace natset {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 2,
  kExitNoData = 3,
  kExitInitialOutside = 4,
  kExitSolverFailure = 5,
};

struct BuildCommand {
  std::filesystem::path tracks;
  std::filesystem::path task;
  std::filesystem::path out;
  int trim = 0;
};

struct DynamicsSpec {
  double dt = 0.0;
  double mass = 1.0;
};

// Parses "dt=<s>,mass=<kg>" (keys in any order, mass optional).
// Throws InvalidArgument.
DynamicsSpec ParseDynamicsSpec(const std::string& text);

struct ProjectCommand {
  std::filesystem::path natset;
  std::filesystem::path candidate;
  DynamicsSpec dynamics;
  std::filesystem::path out;
  ProjectionOptions options;
};

struct GenCommand {
  std::string kind = "curved_road";
  int count = 40;
  std::uint64_t seed = 7;
  std::filesystem::path out_dir;
};

struct ExportSvgCommand {
  std::filesystem::path natset;
  std::optional<std::filesystem::path> projection;
  std::filesystem::path out;
};

int RunBuild(const BuildCommand& cmd, std::ostream& out, std::ostream& err);
int RunProject(const ProjectCommand& cmd, std::ostream& out,
               std::ostream& err);
int RunGen(const GenCommand& cmd, std::ostream& out, std::ostream& err);
int RunExportSvg(const ExportSvgCommand& cmd, std::ostream& out,
                 std::ostream& err);

}  // namespace natset

#endif  // NATSET_COMMANDS_H_
