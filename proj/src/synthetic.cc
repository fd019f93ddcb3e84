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

#include "natset/synthetic.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>
#include <utility>

#include "natset/errors.h"

namespace natset {
namespace {

constexpr double kRegionMargin = 1.0;
constexpr double kPullAwayAccel = 2.5;
constexpr double kMinWait = 1.0;
constexpr double kMaxWait = 3.0;
constexpr double kVehicleHalfWidth = 0.6;

// Along-lane position of a stop-and-go vehicle at time tau.
double StopAndGoPosition(double tau, double speed, double brake_start,
                         double brake_accel, double wait) {
  const double t_brake = brake_start / speed;
  if (tau <= t_brake) return speed * tau;
  const double t_stop = speed / brake_accel;
  const double stop_x =
      brake_start + speed * speed / (2.0 * brake_accel);
  if (tau <= t_brake + t_stop) {
    const double s = tau - t_brake;
    return brake_start + speed * s - 0.5 * brake_accel * s * s;
  }
  if (tau <= t_brake + t_stop + wait) return stop_x;
  const double s = tau - t_brake - t_stop - wait;
  const double t_ramp = speed / kPullAwayAccel;
  if (s <= t_ramp) return stop_x + 0.5 * kPullAwayAccel * s * s;
  return stop_x + 0.5 * speed * t_ramp + speed * (s - t_ramp);
}

// Fills velocities, accelerations and headings from the positions.
void DifferentiatePositions(Trajectory& traj) {
  const double dt = traj.dt();
  auto& s = traj.states;
  const std::size_t n = s.size();
  for (std::size_t t = 0; t + 1 < n; ++t) {
    s[t].velocity = {(s[t + 1].position.x - s[t].position.x) / dt,
                     (s[t + 1].position.y - s[t].position.y) / dt};
  }
  s[n - 1].velocity = s[n - 2].velocity;
  for (std::size_t t = 0; t + 1 < n; ++t) {
    s[t].acceleration = (s[t + 1].velocity - s[t].velocity) / dt;
  }
  s[n - 1].acceleration = Eigen::Vector2d::Zero();
  for (auto& state : s) {
    state.heading = std::atan2(state.velocity.y(), state.velocity.x());
  }
}

// Hull of the points, each grown into a square of half-width `margin`.
Region EnclosingRegion(const std::vector<Point2>& points, double margin) {
  std::vector<Point2> grown;
  grown.reserve(4 * points.size());
  for (const Point2& p : points) {
    grown.push_back({p.x - margin, p.y - margin});
    grown.push_back({p.x + margin, p.y - margin});
    grown.push_back({p.x + margin, p.y + margin});
    grown.push_back({p.x - margin, p.y + margin});
  }
  return Region(QuickHull(grown));
}

std::string FormatNumber(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

std::string_view ToString(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::kCurvedRoad:
      return "curved_road";
    case ScenarioKind::kStraightRoadWithStop:
      return "straight_road_with_stop";
  }
  return "unknown";
}

std::optional<ScenarioKind> ParseScenarioKind(std::string_view name) {
  if (name == "curved_road") return ScenarioKind::kCurvedRoad;
  if (name == "straight_road_with_stop") {
    return ScenarioKind::kStraightRoadWithStop;
  }
  return std::nullopt;
}

ScenarioSpec DefaultScenario(ScenarioKind kind) {
  ScenarioSpec spec;
  spec.kind = kind;
  if (kind == ScenarioKind::kStraightRoadWithStop) spec.horizon = 150;
  return spec;
}

void ValidateScenario(const ScenarioSpec& spec) {
  if (spec.count < 3) {
    throw InvalidArgument("scenario needs at least 3 trajectories");
  }
  if (spec.horizon < 1 || !(spec.dt > 0.0)) {
    throw InvalidArgument("scenario horizon and dt must be positive");
  }
  if (!(spec.min_speed > 0.0) || spec.max_speed < spec.min_speed) {
    throw InvalidArgument("scenario speeds must be positive and ordered");
  }
  if (!(spec.noise_std >= 0.0)) {
    throw InvalidArgument("noise standard deviation must be non-negative");
  }
  if (spec.kind == ScenarioKind::kCurvedRoad &&
      !(spec.inner_radius > 0.0 && spec.outer_radius > spec.inner_radius)) {
    throw InvalidArgument("radius band must satisfy 0 < inner < outer");
  }
  if (spec.kind == ScenarioKind::kStraightRoadWithStop &&
      !(spec.lane_width > 2.0 * kVehicleHalfWidth && spec.stop_line > 0.0)) {
    throw InvalidArgument("lane must be wider than a vehicle and the stop "
                          "line ahead of the start");
  }
}

Scenario GenerateScenario(const ScenarioSpec& spec) {
  ValidateScenario(spec);
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> noise(0.0, 1.0);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };

  std::vector<Trajectory> trajectories;
  std::vector<Point2> starts, ends;
  for (int i = 0; i < spec.count; ++i) {
    const double speed = uniform(spec.min_speed, spec.max_speed);
    Trajectory traj;
    traj.actor_id = std::to_string(i);
    traj.frame_rate = 1.0 / spec.dt;
    traj.first_frame = 0;
    traj.states.resize(spec.horizon + 1);

    std::vector<Point2> ideal(spec.horizon + 1);
    if (spec.kind == ScenarioKind::kCurvedRoad) {
      const double radius = uniform(spec.inner_radius, spec.outer_radius);
      for (int t = 0; t <= spec.horizon; ++t) {
        const double angle =
            spec.start_angle + speed * t * spec.dt / radius;
        ideal[t] = spec.arc_center +
                   Point2{radius * std::cos(angle), radius * std::sin(angle)};
      }
    } else {
      const double half = 0.5 * spec.lane_width - kVehicleHalfWidth;
      const double lateral = uniform(-half, half);
      const bool stops = i % 2 == 1;
      const double brake_start = 0.2 * spec.stop_line;
      const double brake_accel =
          speed * speed / (2.0 * (spec.stop_line - brake_start));
      const double wait = uniform(kMinWait, kMaxWait);
      for (int t = 0; t <= spec.horizon; ++t) {
        const double tau = t * spec.dt;
        const double x =
            stops ? StopAndGoPosition(tau, speed, brake_start, brake_accel, wait)
                  : speed * tau;
        ideal[t] = {x, lateral};
      }
    }
    for (int t = 0; t <= spec.horizon; ++t) {
      traj.states[t].position =
          ideal[t] + Point2{spec.noise_std * noise(rng),
                            spec.noise_std * noise(rng)};
    }
    DifferentiatePositions(traj);
    starts.push_back(traj.states.front().position);
    ends.push_back(traj.states.back().position);
    trajectories.push_back(std::move(traj));
  }

  return Scenario{std::move(trajectories),
                  TaskConfig{Task{EnclosingRegion(starts, kRegionMargin),
                                  EnclosingRegion(ends, kRegionMargin),
                                  kDefaultMinSpeed},
                             1.0 / spec.dt}};
}

std::string TrajectoriesToCsv(const std::vector<Trajectory>& trajectories) {
  std::ostringstream out;
  out << "trackId,frame,xCenter,yCenter,xVelocity,yVelocity,xAcceleration,"
         "yAcceleration,heading\n";
  for (const Trajectory& traj : trajectories) {
    for (std::size_t t = 0; t < traj.states.size(); ++t) {
      const RawActorState& s = traj.states[t];
      out << traj.actor_id << ',' << traj.first_frame + t << ','
          << FormatNumber(s.position.x) << ',' << FormatNumber(s.position.y)
          << ',' << FormatNumber(s.velocity.x()) << ','
          << FormatNumber(s.velocity.y()) << ','
          << FormatNumber(s.acceleration.x()) << ','
          << FormatNumber(s.acceleration.y()) << ','
          << FormatNumber(s.heading) << '\n';
    }
  }
  return out.str();
}

CandidateTrajectory StraightLineCandidate(
    const std::vector<Trajectory>& trajectories, int horizon, double dt) {
  auto centroid_at = [&](int t) {
    std::vector<Point2> pts;
    for (const Trajectory& traj : trajectories) {
      if (traj.horizon() >= t) pts.push_back(traj.states[t].position);
    }
    return QuickHull(pts).Centroid();
  };
  const Point2 start = centroid_at(0);
  const Point2 end = centroid_at(horizon);
  const Point2 velocity = (end - start) * (1.0 / (horizon * dt));

  CandidateTrajectory candidate;
  candidate.dt = dt;
  for (int t = 0; t <= horizon; ++t) {
    const Point2 p = start + velocity * (t * dt);
    candidate.states.push_back({p.x, velocity.x, p.y, velocity.y});
  }
  return candidate;
}

Point2 LaneDirection(const ScenarioSpec& spec, const Point2& p) {
  if (spec.kind == ScenarioKind::kStraightRoadWithStop) return {1.0, 0.0};
  // Counterclockwise tangent around the arc center.
  const Point2 r = p - spec.arc_center;
  const double len = std::hypot(r.x, r.y);
  return {-r.y / len, r.x / len};
}

double AlongLaneExtent(const ScenarioSpec& spec, const ConvexPolygon& poly) {
  const Point2 dir = LaneDirection(spec, poly.Centroid());
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const Point2& v : poly.vertices()) {
    const double s = v.x * dir.x + v.y * dir.y;
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  return hi - lo;
}

}  // namespace natset
