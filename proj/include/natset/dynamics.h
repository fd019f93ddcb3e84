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

// Planar double-integrator point mass and its condensed control-to-state map.

#ifndef NATSET_DYNAMICS_H_
#define NATSET_DYNAMICS_H_

#include <span>
#include <vector>

#include <Eigen/Core>

namespace natset {

inline constexpr int kStateDim = 4;
inline constexpr int kControlDim = 2;

using Control = Eigen::Vector2d;

// State ordering (p_x, v_x, p_y, v_y).
struct StateVec {
  double px = 0.0;
  double vx = 0.0;
  double py = 0.0;
  double vy = 0.0;

  Eigen::Vector4d ToVector() const { return {px, vx, py, vy}; }
  static StateVec FromVector(const Eigen::Ref<const Eigen::Vector4d>& v) {
    return {v(0), v(1), v(2), v(3)};
  }
  friend bool operator==(const StateVec&, const StateVec&) = default;
};

// x_{t+1} = A x_t + B u_t with u_t = (F_x, F_y).
struct LinearDynamics {
  Eigen::Matrix4d A;
  Eigen::Matrix<double, 4, 2> B;
  double dt = 0.0;
  double mass = 0.0;
};

// Throws NonPositiveParameter unless dt > 0 and mass > 0.
LinearDynamics DoubleIntegrator(double dt, double mass = 1.0);

// Returns controls.size() + 1 states starting with x_init.
std::vector<StateVec> Rollout(const LinearDynamics& dyn, const StateVec& x_init,
                              std::span<const Control> controls);

// Stacked states xi = phi * x_init + gamma * U, where U stacks the controls
// u_0 ... u_{H-1} and xi stacks x_0 ... x_H.
struct CondensedMap {
  Eigen::MatrixXd phi;    // (H+1)*4 x 4
  Eigen::MatrixXd gamma;  // (H+1)*4 x H*2

  int horizon() const { return static_cast<int>(gamma.cols()) / kControlDim; }
};

CondensedMap Condense(const LinearDynamics& dyn, int horizon);

}  // namespace natset

#endif  // NATSET_DYNAMICS_H_
