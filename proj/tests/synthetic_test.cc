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

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "natset/errors.h"
#include "natset/natset.h"

namespace natset {
namespace {

TEST(GenerateScenarioTest, DeterministicForSeed) {
  const ScenarioSpec spec = DefaultScenario(ScenarioKind::kCurvedRoad);
  EXPECT_EQ(TrajectoriesToCsv(GenerateScenario(spec).trajectories),
            TrajectoriesToCsv(GenerateScenario(spec).trajectories));
  ScenarioSpec other = spec;
  other.seed = 8;
  EXPECT_NE(TrajectoriesToCsv(GenerateScenario(spec).trajectories),
            TrajectoriesToCsv(GenerateScenario(other).trajectories));
}

TEST(GenerateScenarioTest, ArcsStayInTheBand) {
  const ScenarioSpec spec = DefaultScenario(ScenarioKind::kCurvedRoad);
  const Scenario sc = GenerateScenario(spec);
  ASSERT_EQ(sc.trajectories.size(), 40u);
  for (const Trajectory& traj : sc.trajectories) {
    ASSERT_EQ(traj.horizon(), spec.horizon);
    for (const RawActorState& s : traj.states) {
      const double r = std::hypot(s.position.x - spec.arc_center.x,
                                  s.position.y - spec.arc_center.y);
      EXPECT_GT(r, spec.inner_radius - 0.1);
      EXPECT_LT(r, spec.outer_radius + 0.1);
    }
  }
}

TEST(GenerateScenarioTest, VelocitiesAreForwardDifferences) {
  ScenarioSpec spec = DefaultScenario(ScenarioKind::kStraightRoadWithStop);
  const Scenario sc = GenerateScenario(spec);
  const LinearDynamics dyn = DoubleIntegrator(spec.dt);
  for (const Trajectory& traj : sc.trajectories) {
    for (std::size_t t = 0; t + 1 < traj.states.size(); ++t) {
      const StateVec now = ToStateVec(traj.states[t]);
      const StateVec next = ToStateVec(traj.states[t + 1]);
      EXPECT_NEAR(next.px, now.px + spec.dt * now.vx, 1e-12);
      EXPECT_NEAR(next.py, now.py + spec.dt * now.vy, 1e-12);
    }
  }
}

TEST(GenerateScenarioTest, StopAndGoVehiclesStop) {
  const ScenarioSpec spec = DefaultScenario(ScenarioKind::kStraightRoadWithStop);
  const Scenario sc = GenerateScenario(spec);
  const Trajectory& stopper = sc.trajectories[1];
  double min_speed = 1e9;
  for (const RawActorState& s : stopper.states) {
    min_speed = std::min(min_speed, s.velocity.norm());
  }
  EXPECT_LT(min_speed, 2.0);
  const Trajectory& passer = sc.trajectories[0];
  EXPECT_GT(passer.states[75].velocity.norm(), spec.min_speed - 2.0);
}

TEST(GenerateScenarioTest, EveryTrajectoryPassesTheEmittedTask) {
  for (ScenarioKind kind :
       {ScenarioKind::kCurvedRoad, ScenarioKind::kStraightRoadWithStop}) {
    const Scenario sc = GenerateScenario(DefaultScenario(kind));
    EXPECT_EQ(FilterTask(sc.trajectories, sc.task.task).trajectories.size(),
              sc.trajectories.size());
  }
}

TEST(GenerateScenarioTest, CsvRoundTrip) {
  const Scenario sc =
      GenerateScenario(DefaultScenario(ScenarioKind::kCurvedRoad));
  std::istringstream in(TrajectoriesToCsv(sc.trajectories));
  const auto back = ParseTrajectories(in, 25.0);
  ASSERT_EQ(back.size(), sc.trajectories.size());
  EXPECT_NEAR(back[3].states[17].position.x,
              sc.trajectories[3].states[17].position.x, 1e-9);
}

TEST(ValidateScenarioTest, RejectsBadSpecs) {
  ScenarioSpec spec;
  spec.count = 2;
  EXPECT_THROW(ValidateScenario(spec), InvalidArgument);
  spec = ScenarioSpec{};
  spec.outer_radius = spec.inner_radius;
  EXPECT_THROW(ValidateScenario(spec), InvalidArgument);
  spec = ScenarioSpec{};
  spec.min_speed = 0.0;
  EXPECT_THROW(ValidateScenario(spec), InvalidArgument);
  EXPECT_FALSE(ParseScenarioKind("roundabout").has_value());
  EXPECT_EQ(ToString(*ParseScenarioKind("straight_road_with_stop")),
            "straight_road_with_stop");
}

TEST(StraightLineCandidateTest, CutsTheCorner) {
  const ScenarioSpec spec = DefaultScenario(ScenarioKind::kCurvedRoad);
  const Scenario sc = GenerateScenario(spec);
  const CandidateTrajectory line =
      StraightLineCandidate(sc.trajectories, spec.horizon, spec.dt);
  ASSERT_EQ(line.horizon(), spec.horizon);
  const StateVec mid = line.states[spec.horizon / 2];
  EXPECT_LT(std::hypot(mid.px, mid.py), spec.inner_radius);
  EXPECT_DOUBLE_EQ(line.states[0].vx, line.states[50].vx);
}

TEST(AlongLaneExtentTest, StraightLaneUsesX) {
  const ScenarioSpec spec = DefaultScenario(ScenarioKind::kStraightRoadWithStop);
  const ConvexPolygon rect({{0, 0}, {4, 0}, {4, 1}, {0, 1}});
  EXPECT_DOUBLE_EQ(AlongLaneExtent(spec, rect), 4.0);
}

}  // namespace
}  // namespace natset
