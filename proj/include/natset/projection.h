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

// Projection of a candidate trajectory into a naturalistic set.
//
// With the initial state fixed to the candidate's first state, the controls
// u_0 ... u_{Ha-1} minimize the weighted squared distance between the rolled
// out states and the candidate states, subject to the double-integrator
// dynamics and the hull constraints G_t y_t <= h_t on the time steps shared
// by the candidate and the set. The dynamics are condensed away so the
// problem is a dense QP in the controls.

#ifndef NATSET_PROJECTION_H_
#define NATSET_PROJECTION_H_

#include <string>
#include <vector>

#include <Eigen/Core>

#include "natset/data.h"
#include "natset/dynamics.h"
#include "natset/natset.h"
#include "natset/qp_solver.h"

namespace natset {

// Hull containment tolerance of a projected trajectory, meters.
inline constexpr double kContainmentTol = 1e-6;

struct CandidateTrajectory {
  std::vector<StateVec> states;
  double dt = 0.0;

  int horizon() const { return static_cast<int>(states.size()) - 1; }
};

CandidateTrajectory CandidateFromTrajectory(const Trajectory& traj);

struct ProjectionOptions {
  SolverSettings solver;
  // Drop the W_0 membership requirement; x_0 = x_init is kept.
  bool relax_initial = false;
  // Per-coordinate weights (p_x, v_x, p_y, v_y) of the distance objective.
  Eigen::Vector4d state_weights = Eigen::Vector4d::Ones();
};

struct ProjectionResult {
  std::vector<StateVec> states;
  std::vector<Control> controls;
  // Weighted squared distance between stacked states and candidate, m^2.
  double objective = 0.0;
  QPStatus status = QPStatus::kMaxIter;
  int iterations = 0;
  // Per constrained time step, the hull rows within kContainmentTol of
  // equality.
  std::vector<std::vector<int>> active_constraints;
  // Signed violation of the candidate before projection, per shared step.
  std::vector<double> violations_before;
};

// Time indices carrying hull constraints: 0 ... min(H, H_a).
std::vector<int> HorizonAlign(int candidate_len, int natset_len);

// Signed violation of the candidate against W_t for t = 0 ... min(H, H_a).
std::vector<double> NaturalismReport(const CandidateTrajectory& candidate,
                                     const NaturalisticSet& natset);

// Throws InitialStateOutsideTube when the first hull state is outside W_0 by
// more than kContainmentTol (unless relaxed), SolverFailure when the QP does
// not reach Optimal, and InvalidArgument for mismatched time steps.
ProjectionResult Project(const CandidateTrajectory& candidate,
                         const NaturalisticSet& natset,
                         const LinearDynamics& dyn,
                         const ProjectionOptions& options = {});

// Weighted squared distance between two state sequences over their common
// length.
double SquaredDistance(const std::vector<StateVec>& a,
                       const std::vector<StateVec>& b,
                       const Eigen::Vector4d& weights = Eigen::Vector4d::Ones());

// {"status", "objective", "states", "controls", "violations_before",
//  "active_constraints", "candidate"}
std::string ProjectionToJson(const ProjectionResult& result,
                             const CandidateTrajectory& candidate);

}  // namespace natset

#endif  // NATSET_PROJECTION_H_
