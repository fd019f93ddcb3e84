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

// Recorded trajectories, single-task filtering and per-time hull-state slices.
//
// Trajectory CSV files carry a header row naming at least the columns
//
//   trackId,frame,xCenter,yCenter,xVelocity,yVelocity,
//   xAcceleration,yAcceleration,heading
//
// in any order; other columns (as found in inD tracks files) are ignored.

#ifndef NATSET_DATA_H_
#define NATSET_DATA_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "natset/dynamics.h"
#include "natset/geometry.h"

namespace natset {

inline constexpr double kDefaultFrameRate = 25.0;
inline constexpr double kDefaultMinSpeed = 0.5;

struct RawActorState {
  Point2 position;
  Eigen::Vector2d velocity = Eigen::Vector2d::Zero();
  Eigen::Vector2d acceleration = Eigen::Vector2d::Zero();
  double heading = 0.0;
};

// Position and velocity only; accelerations and heading are dropped.
StateVec ToStateVec(const RawActorState& s);

struct Trajectory {
  std::string actor_id;
  double frame_rate = kDefaultFrameRate;
  // Recording frame of states[0].
  std::int64_t first_frame = 0;
  std::vector<RawActorState> states;

  // Final time index H^i.
  int horizon() const { return static_cast<int>(states.size()) - 1; }
  double dt() const { return 1.0 / frame_rate; }
};

std::vector<Trajectory> ParseTrajectories(std::istream& in, double frame_rate);

// Throws ParseError for malformed rows and GapError when an actor skips a
// frame. Trajectories come back in order of first appearance.
std::vector<Trajectory> LoadTrajectories(const std::filesystem::path& path,
                                         double frame_rate);

struct Region {
  ConvexPolygon polygon;
  HalfSpaceSet halfspaces;

  explicit Region(ConvexPolygon poly);
  bool Contains(const Point2& p) const;
};

struct Task {
  Region start;
  Region end;
  double min_speed = kDefaultMinSpeed;
};

struct TaskConfig {
  Task task;
  double frame_rate = kDefaultFrameRate;
};

// Reads {"start_polygon": [[x,y],...], "end_polygon": [[x,y],...],
// "min_speed": s, "frame_rate": f}. Polygon corners may be given in either
// orientation; the region is their convex hull.
TaskConfig ParseTaskConfig(const std::string& json_text);
TaskConfig LoadTaskConfig(const std::filesystem::path& path);
std::string TaskConfigToJson(const TaskConfig& config);

// Trajectories that perform one task, re-indexed so that t = 0 is the first
// frame inside the start region. Build with FilterTask().
struct TaskDataset {
  std::vector<Trajectory> trajectories;
  Task task;
};

// Keeps trajectories that enter the start region, finish inside the end
// region, and reach min_speed at some point after entering. Throws EmptyTask
// if nothing survives.
TaskDataset FilterTask(const std::vector<Trajectory>& trajectories,
                       const Task& task);

// Selector matrix mapping a dynamics state to a planar hull state.
class HullTransform {
 public:
  using Selector = Eigen::Matrix<double, 2, kStateDim>;

  // Throws InvalidArgument unless each row holds exactly one 1.
  explicit HullTransform(const Selector& selector);

  // (p_x, p_y).
  static HullTransform Position();

  const Selector& selector() const { return selector_; }
  Point2 Apply(const StateVec& x) const;

 private:
  Selector selector_;
};

struct TimeSlice {
  int t = 0;
  std::vector<Point2> hull_states;
};

// Hull states of every trajectory with horizon >= t, in dataset order.
TimeSlice SliceAt(const TaskDataset& dataset, int t,
                  const HullTransform& transform);

}  // namespace natset

#endif  // NATSET_DATA_H_
