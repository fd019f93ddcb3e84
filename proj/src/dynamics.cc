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

#include "natset/dynamics.h"

#include <string>

#include "natset/errors.h"

namespace natset {

LinearDynamics DoubleIntegrator(double dt, double mass) {
  if (!(dt > 0.0)) {
    throw NonPositiveParameter("time step must be positive, got " +
                               std::to_string(dt));
  }
  if (!(mass > 0.0)) {
    throw NonPositiveParameter("mass must be positive, got " +
                               std::to_string(mass));
  }
  LinearDynamics dyn;
  dyn.dt = dt;
  dyn.mass = mass;
  dyn.A.setIdentity();
  dyn.A(0, 1) = dt;
  dyn.A(2, 3) = dt;
  dyn.B.setZero();
  dyn.B(1, 0) = dt / mass;
  dyn.B(3, 1) = dt / mass;
  return dyn;
}

std::vector<StateVec> Rollout(const LinearDynamics& dyn, const StateVec& x_init,
                              std::span<const Control> controls) {
  std::vector<StateVec> states;
  states.reserve(controls.size() + 1);
  states.push_back(x_init);
  Eigen::Vector4d x = x_init.ToVector();
  for (const Control& u : controls) {
    x = (dyn.A * x + dyn.B * u).eval();
    states.push_back(StateVec::FromVector(x));
  }
  return states;
}

CondensedMap Condense(const LinearDynamics& dyn, int horizon) {
  if (horizon < 1) {
    throw InvalidArgument("condensation horizon must be at least 1, got " +
                          std::to_string(horizon));
  }
  const int n = kStateDim;
  const int m = kControlDim;
  CondensedMap map;
  map.phi.resize((horizon + 1) * n, n);
  map.gamma = Eigen::MatrixXd::Zero((horizon + 1) * n, horizon * m);

  // impulse[j] = A^j B.
  std::vector<Eigen::Matrix<double, 4, 2>> impulse(horizon);
  Eigen::Matrix4d power = Eigen::Matrix4d::Identity();
  for (int t = 0; t <= horizon; ++t) {
    map.phi.block(t * n, 0, n, n) = power;
    if (t < horizon) impulse[t] = power * dyn.B;
    power = (dyn.A * power).eval();
  }
  for (int t = 1; t <= horizon; ++t) {
    for (int k = 0; k < t; ++k) {
      map.gamma.block(t * n, k * m, n, m) = impulse[t - 1 - k];
    }
  }
  return map;
}

}  // namespace natset
