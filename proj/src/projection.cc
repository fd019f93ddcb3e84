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
#include <string>
#include <utility>

#include "json.hpp"
#include "natset/errors.h"

namespace natset {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using json = nlohmann::json;

constexpr double kTimeStepTol = 1e-12;

VectorXd Stack(const std::vector<StateVec>& states) {
  VectorXd out(kStateDim * states.size());
  for (std::size_t t = 0; t < states.size(); ++t) {
    out.segment<kStateDim>(kStateDim * t) = states[t].ToVector();
  }
  return out;
}

json StatesToJson(const std::vector<StateVec>& states) {
  json arr = json::array();
  for (const StateVec& s : states) arr.push_back({s.px, s.vx, s.py, s.vy});
  return arr;
}

}  // namespace

CandidateTrajectory CandidateFromTrajectory(const Trajectory& traj) {
  CandidateTrajectory candidate;
  candidate.dt = traj.dt();
  candidate.states.reserve(traj.states.size());
  for (const RawActorState& s : traj.states) {
    candidate.states.push_back(ToStateVec(s));
  }
  return candidate;
}

std::vector<int> HorizonAlign(int candidate_len, int natset_len) {
  if (candidate_len < 1 || natset_len < 1) {
    throw InvalidArgument("trajectory and natset lengths must be at least 1");
  }
  const int last = std::min(candidate_len, natset_len) - 1;
  std::vector<int> steps(last + 1);
  for (int t = 0; t <= last; ++t) steps[t] = t;
  return steps;
}

std::vector<double> NaturalismReport(const CandidateTrajectory& candidate,
                                     const NaturalisticSet& natset) {
  std::vector<double> report;
  if (candidate.states.empty()) return report;
  for (int t : HorizonAlign(static_cast<int>(candidate.states.size()),
                            static_cast<int>(natset.hulls.size()))) {
    report.push_back(
        SignedViolation(natset.hulls[t].halfspaces,
                        natset.transform.Apply(candidate.states[t])));
  }
  return report;
}

double SquaredDistance(const std::vector<StateVec>& a,
                       const std::vector<StateVec>& b,
                       const Eigen::Vector4d& weights) {
  const std::size_t len = std::min(a.size(), b.size());
  double total = 0.0;
  for (std::size_t t = 0; t < len; ++t) {
    const Eigen::Vector4d d = a[t].ToVector() - b[t].ToVector();
    total += weights.dot(d.cwiseProduct(d));
  }
  return total;
}

ProjectionResult Project(const CandidateTrajectory& candidate,
                         const NaturalisticSet& natset,
                         const LinearDynamics& dyn,
                         const ProjectionOptions& options) {
  if (candidate.states.size() < 2) {
    throw InvalidArgument("candidate trajectory needs at least 2 states");
  }
  if (std::abs(candidate.dt - natset.dt) > kTimeStepTol ||
      std::abs(candidate.dt - dyn.dt) > kTimeStepTol) {
    throw InvalidArgument("candidate, natset and dynamics time steps differ");
  }
  if (!(options.state_weights.array() > 0.0).all()) {
    throw InvalidArgument("state weights must be positive");
  }
  if (natset.hulls.empty()) throw InvalidArgument("natset has no hulls");

  const StateVec& x_init = candidate.states.front();
  const double initial_violation = SignedViolation(
      natset.hulls.front().halfspaces, natset.transform.Apply(x_init));
  if (initial_violation > kContainmentTol && !options.relax_initial) {
    throw InitialStateOutsideTube(initial_violation);
  }

  const int horizon = candidate.horizon();
  const CondensedMap map = Condense(dyn, horizon);
  const VectorXd target = Stack(candidate.states);
  const VectorXd free_response = map.phi * x_init.ToVector();
  const VectorXd weights = options.state_weights.replicate(horizon + 1, 1);

  QuadraticProgram qp;
  const MatrixXd weighted_gamma = weights.asDiagonal() * map.gamma;
  qp.P = 2.0 * map.gamma.transpose() * weighted_gamma;
  qp.P = 0.5 * (qp.P + qp.P.transpose()).eval();
  qp.q = 2.0 * weighted_gamma.transpose() * (free_response - target);

  // Hull rows on t = 1 ... min(H, H_a); W_0 was checked above since x_0 is
  // fixed. Rows that no control can move are checked here and dropped.
  const std::vector<int> steps = HorizonAlign(
      static_cast<int>(candidate.states.size()),
      static_cast<int>(natset.hulls.size()));
  const MatrixXd& selector = natset.transform.selector();
  std::vector<VectorXd> rows;
  std::vector<double> offsets;
  for (int t : steps) {
    if (t == 0) continue;
    const HalfSpaceSet& hs = natset.hulls[t].halfspaces;
    const MatrixXd sel_gamma =
        selector * map.gamma.middleRows(kStateDim * t, kStateDim);
    const VectorXd sel_free =
        selector * free_response.segment<kStateDim>(kStateDim * t);
    const MatrixXd a = hs.G * sel_gamma;
    const VectorXd b = hs.h - hs.G * sel_free;
    for (int i = 0; i < hs.rows(); ++i) {
      if (a.row(i).cwiseAbs().maxCoeff() == 0.0) {
        if (b(i) < -kContainmentTol) {
          throw SolverFailure("hull at t = " + std::to_string(t) +
                              " is unreachable from the initial state (" +
                              std::to_string(-b(i)) + " m outside)");
        }
        continue;
      }
      rows.push_back(a.row(i).transpose());
      offsets.push_back(b(i));
    }
  }
  qp.A.resize(static_cast<int>(rows.size()), qp.q.size());
  qp.b.resize(static_cast<int>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    qp.A.row(r) = rows[r].transpose();
    qp.b(r) = offsets[r];
  }

  const QPSolution sol = Solve(qp, options.solver);
  if (sol.status != QPStatus::kOptimal) {
    throw SolverFailure("projection QP ended with status " +
                        std::string(ToString(sol.status)) + " after " +
                        std::to_string(sol.iterations) + " iterations");
  }

  ProjectionResult result;
  result.status = sol.status;
  result.iterations = sol.iterations;
  result.controls.reserve(horizon);
  for (int k = 0; k < horizon; ++k) {
    result.controls.push_back(sol.z.segment<kControlDim>(kControlDim * k));
  }
  result.states = Rollout(dyn, x_init, result.controls);
  result.objective =
      SquaredDistance(result.states, candidate.states, options.state_weights);
  for (int t : steps) {
    const HalfSpaceSet& hs = natset.hulls[t].halfspaces;
    const Point2 y = natset.transform.Apply(result.states[t]);
    std::vector<int> active;
    for (int i = 0; i < hs.rows(); ++i) {
      if (std::abs(hs.G(i, 0) * y.x + hs.G(i, 1) * y.y - hs.h(i)) <=
          kContainmentTol) {
        active.push_back(i);
      }
    }
    result.active_constraints.push_back(std::move(active));
  }
  result.violations_before = NaturalismReport(candidate, natset);
  return result;
}

std::string ProjectionToJson(const ProjectionResult& result,
                             const CandidateTrajectory& candidate) {
  json j;
  j["status"] = std::string(ToString(result.status));
  j["objective"] = result.objective;
  j["states"] = StatesToJson(result.states);
  json controls = json::array();
  for (const Control& u : result.controls) controls.push_back({u.x(), u.y()});
  j["controls"] = controls;
  j["violations_before"] = result.violations_before;
  j["active_constraints"] = result.active_constraints;
  j["candidate"] = StatesToJson(candidate.states);
  return j.dump(1) + "\n";
}

}  // namespace natset
