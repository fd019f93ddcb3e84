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

#include "natset/projection.h"

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "json.hpp"
#include "natset/errors.h"
#include "natset/synthetic.h"

namespace natset {
namespace {

NaturalisticSet Squares(int horizon, double dt) {
  NaturalisticSet ns;
  ns.dt = dt;
  for (int t = 0; t <= horizon; ++t) {
    ConvexPolygon sq({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    HalfSpaceSet hs = ToHalfSpaces(sq);
    ns.hulls.push_back({t, std::move(sq), std::move(hs), 3});
  }
  return ns;
}

struct CurvedRoad {
  ScenarioSpec spec;
  TaskDataset dataset;
  NaturalisticSet natset;
};

CurvedRoad* MakeRoad() {
  const ScenarioSpec spec = DefaultScenario(ScenarioKind::kCurvedRoad);
  const Scenario sc = GenerateScenario(spec);
  TaskDataset dataset = FilterTask(sc.trajectories, sc.task.task);
  NaturalisticSet natset = BuildNatset(dataset, HullTransform::Position());
  return new CurvedRoad{spec, std::move(dataset), std::move(natset)};
}

const CurvedRoad& Road() {
  static const CurvedRoad* road = MakeRoad();
  return *road;
}

TEST(HorizonAlignTest, Overlap) {
  EXPECT_EQ(HorizonAlign(7, 11).back(), 6);
  EXPECT_EQ(HorizonAlign(11, 7).back(), 6);
  EXPECT_EQ(HorizonAlign(7, 7).size(), 7u);
  EXPECT_EQ(HorizonAlign(7, 7).front(), 0);
  EXPECT_THROW(HorizonAlign(0, 3), InvalidArgument);
}

TEST(ProjectTest, OneStepPositionIsFixedByInitialVelocity) {
  // p_1 = p_0 + dt v_0 whatever the force, so only the velocity can move.
  const CandidateTrajectory cand{{{0, 0, 0.5, 0}, {2, 2, 0.5, 0}}, 1.0};
  const ProjectionResult r =
      Project(cand, Squares(1, 1.0), DoubleIntegrator(1.0, 1.0));
  EXPECT_NEAR(r.states[1].px, 0.0, 1e-12);
  EXPECT_NEAR(r.states[1].py, 0.5, 1e-12);
  EXPECT_NEAR(r.states[1].vx, 2.0, 1e-6);
  EXPECT_NEAR(r.objective, 4.0, 1e-6);
}

TEST(ProjectTest, TwoStepTargetProjectsOntoSquare) {
  const CandidateTrajectory cand{
      {{0, 0, 0.5, 0}, {0, 2, 0.5, 0}, {2, 2, 0.5, 0}}, 1.0};
  const ProjectionResult r =
      Project(cand, Squares(2, 1.0), DoubleIntegrator(1.0, 1.0));
  ASSERT_EQ(r.status, QPStatus::kOptimal);
  EXPECT_NEAR(r.states[2].px, 1.0, 1e-6);
  EXPECT_NEAR(r.states[2].py, 0.5, 1e-6);
  EXPECT_NEAR(r.objective, 2.0, 1e-6);
  ASSERT_EQ(r.active_constraints.size(), 3u);
  EXPECT_EQ(r.active_constraints[2].size(), 1u);
}

TEST(ProjectTest, DatasetTrajectoryIsFixedPoint) {
  const CurvedRoad& road = Road();
  const LinearDynamics dyn = DoubleIntegrator(road.spec.dt);
  for (int i = 0; i < 5; ++i) {
    const CandidateTrajectory cand =
        CandidateFromTrajectory(road.dataset.trajectories[i]);
    const ProjectionResult r = Project(cand, road.natset, dyn);
    EXPECT_LE(r.objective, 1e-8);
    double dev = 0;
    for (std::size_t t = 0; t < cand.states.size(); ++t) {
      dev = std::max(dev, (r.states[t].ToVector() - cand.states[t].ToVector())
                              .cwiseAbs()
                              .maxCoeff());
    }
    EXPECT_LE(dev, 1e-6);
    for (double v : r.violations_before) EXPECT_LE(v, 1e-9);
  }
}

TEST(ProjectTest, StraightLineBendsIntoTheRoad) {
  const CurvedRoad& road = Road();
  const LinearDynamics dyn = DoubleIntegrator(road.spec.dt);
  const CandidateTrajectory cand = StraightLineCandidate(
      road.dataset.trajectories, road.natset.horizon(), road.spec.dt);
  const ProjectionResult r = Project(cand, road.natset, dyn);
  ASSERT_EQ(r.status, QPStatus::kOptimal);
  EXPECT_GT(*std::max_element(r.violations_before.begin(),
                              r.violations_before.end()),
            0.0);
  for (int t = 0; t <= road.natset.horizon(); ++t) {
    EXPECT_TRUE(Contains(road.natset.hulls[t].halfspaces,
                         road.natset.transform.Apply(r.states[t]),
                         kContainmentTol))
        << "t = " << t;
  }
  const auto replay = Rollout(dyn, r.states[0], r.controls);
  for (std::size_t t = 0; t < replay.size(); ++t) {
    EXPECT_EQ(replay[t], r.states[t]);
  }
}

TEST(ProjectTest, LongerCandidateKeepsTailInObjectiveOnly) {
  const NaturalisticSet ns = Squares(2, 1.0);
  CandidateTrajectory cand{{{0.5, 0, 0.5, 0}}, 1.0};
  for (int t = 1; t <= 5; ++t) cand.states.push_back({0.5 + t, 1, 0.5, 0});
  const ProjectionResult r = Project(cand, ns, DoubleIntegrator(1.0));
  EXPECT_EQ(r.states.size(), 6u);
  EXPECT_EQ(r.active_constraints.size(), 3u);
  EXPECT_EQ(r.violations_before.size(), 3u);
  EXPECT_LE(r.states[2].px, 1.0 + 1e-6);
  EXPECT_GT(r.states[5].px, 2.0);
}

TEST(ProjectTest, InitialStateOutside) {
  const CandidateTrajectory cand{{{10.5, 0, 0.5, 0}, {10.5, 0, 0.5, 0}}, 1.0};
  try {
    Project(cand, Squares(1, 1.0), DoubleIntegrator(1.0));
    FAIL() << "expected InitialStateOutsideTube";
  } catch (const InitialStateOutsideTube& e) {
    EXPECT_NEAR(e.violation(), 9.5, 1e-12);
  }
}

TEST(ProjectTest, RelaxInitialStillNeedsReachableHulls) {
  // Outside W_0 but able to drive back in by t = 2.
  const CandidateTrajectory cand{
      {{1.2, -0.5, 0.5, 0}, {0.7, -0.5, 0.5, 0}, {0.2, -0.5, 0.5, 0}}, 1.0};
  ProjectionOptions opts;
  opts.relax_initial = true;
  const ProjectionResult r =
      Project(cand, Squares(2, 1.0), DoubleIntegrator(1.0), opts);
  EXPECT_EQ(r.status, QPStatus::kOptimal);
  EXPECT_EQ(r.states[0], cand.states[0]);
  EXPECT_LE(r.objective, 1e-8);

  // Hull at t = 1 cannot be reached: position there is fixed by x_init.
  const CandidateTrajectory far{{{5, 0, 0.5, 0}, {5, 0, 0.5, 0}}, 1.0};
  EXPECT_THROW(Project(far, Squares(1, 1.0), DoubleIntegrator(1.0), opts),
               SolverFailure);
}

TEST(ProjectTest, RejectsBadArguments) {
  const NaturalisticSet ns = Squares(2, 1.0);
  const CandidateTrajectory one{{{0.5, 0, 0.5, 0}}, 1.0};
  EXPECT_THROW(Project(one, ns, DoubleIntegrator(1.0)), InvalidArgument);
  const CandidateTrajectory cand{{{0.5, 0, 0.5, 0}, {0.5, 0, 0.5, 0}}, 0.5};
  EXPECT_THROW(Project(cand, ns, DoubleIntegrator(1.0)), InvalidArgument);
  ProjectionOptions opts;
  opts.state_weights(1) = 0.0;
  const CandidateTrajectory ok{{{0.5, 0, 0.5, 0}, {0.5, 0, 0.5, 0}}, 1.0};
  EXPECT_THROW(Project(ok, ns, DoubleIntegrator(1.0), opts), InvalidArgument);
}

TEST(ProjectTest, VelocityWeightChangesTheTradeoff) {
  const CandidateTrajectory cand{
      {{0, 0, 0.5, 0}, {0, 2, 0.5, 0}, {2, 2, 0.5, 0}}, 1.0};
  ProjectionOptions opts;
  opts.state_weights << 1.0, 1e-3, 1.0, 1e-3;
  const ProjectionResult r =
      Project(cand, Squares(2, 1.0), DoubleIntegrator(1.0), opts);
  EXPECT_NEAR(r.states[2].px, 1.0, 1e-6);
  EXPECT_NEAR(r.objective, 1.0 + 1e-3, 1e-6);
}

TEST(NaturalismReportTest, LengthFollowsOverlap) {
  const NaturalisticSet ns = Squares(10, 1.0);
  CandidateTrajectory cand{{}, 1.0};
  for (int t = 0; t <= 6; ++t) cand.states.push_back({0.5, 0, 0.5, 0});
  const auto report = NaturalismReport(cand, ns);
  ASSERT_EQ(report.size(), 7u);
  for (double v : report) EXPECT_DOUBLE_EQ(v, -0.5);
}

TEST(ProjectionJsonTest, HasDocumentedKeys) {
  const CandidateTrajectory cand{
      {{0, 0, 0.5, 0}, {0, 2, 0.5, 0}, {2, 2, 0.5, 0}}, 1.0};
  const ProjectionResult r =
      Project(cand, Squares(2, 1.0), DoubleIntegrator(1.0));
  const auto j = nlohmann::json::parse(ProjectionToJson(r, cand));
  for (const char* key : {"status", "objective", "states", "controls",
                          "violations_before", "active_constraints"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["status"], "Optimal");
  EXPECT_EQ(j["states"].size(), 3u);
  EXPECT_EQ(j["controls"].size(), 2u);
}

}  // namespace
}  // namespace natset
