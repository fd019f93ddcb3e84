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

// Synthetic driving scenes standing in for recorded intersection data.
//
// curved_road: constant-speed arcs around a common center, each with its own
// radius inside a lane band and its own speed.
//
// straight_road_with_stop: eastbound traffic in a straight lane where even
// indexed vehicles pass through at constant speed and odd indexed vehicles
// brake to a stop line, wait, and pull away again.
//
// Velocities are forward differences of the (noisy) positions, so every
// emitted trajectory is reproduced exactly by the double integrator.

#ifndef NATSET_SYNTHETIC_H_
#define NATSET_SYNTHETIC_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "natset/data.h"
#include "natset/geometry.h"
#include "natset/projection.h"

namespace natset {

enum class ScenarioKind { kCurvedRoad, kStraightRoadWithStop };

std::string_view ToString(ScenarioKind kind);
std::optional<ScenarioKind> ParseScenarioKind(std::string_view name);

struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::kCurvedRoad;
  int count = 40;
  int horizon = 100;  // steps per trajectory
  double dt = 0.04;

  // curved_road: arcs around arc_center, counterclockwise from start_angle.
  Point2 arc_center{0.0, 0.0};
  double inner_radius = 48.0;
  double outer_radius = 52.0;
  double start_angle = -1.5707963267948966;

  // straight_road_with_stop: lane along +x centered on y = 0.
  double lane_width = 3.5;
  double stop_line = 25.0;

  double min_speed = 8.0;
  double max_speed = 14.0;
  double noise_std = 0.02;
  std::uint64_t seed = 7;
};

// Defaults tuned per kind (the stop-and-go family needs a longer horizon).
ScenarioSpec DefaultScenario(ScenarioKind kind);

// Throws InvalidArgument when count < 3, the radius band or lane is empty,
// speeds are not positive and ordered, or dt/horizon are not positive.
void ValidateScenario(const ScenarioSpec& spec);

struct Scenario {
  std::vector<Trajectory> trajectories;
  // Start and end regions enclose the emitted start and end points with a
  // 1 m margin, so every trajectory passes the task filter.
  TaskConfig task;
};

Scenario GenerateScenario(const ScenarioSpec& spec);

std::string TrajectoriesToCsv(const std::vector<Trajectory>& trajectories);

// Constant-velocity straight line from the centroid of the start hull to the
// centroid of the hull at `horizon`, sampled every dt.
CandidateTrajectory StraightLineCandidate(
    const std::vector<Trajectory>& trajectories, int horizon, double dt);

// Unit direction of travel of the lane at p.
Point2 LaneDirection(const ScenarioSpec& spec, const Point2& p);

// Extent of the polygon along the lane direction at its centroid.
double AlongLaneExtent(const ScenarioSpec& spec, const ConvexPolygon& poly);

}  // namespace natset

#endif  // NATSET_SYNTHETIC_H_
