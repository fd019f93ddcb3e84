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

// Slow, obviously-correct reference implementations used only by tests.
// They share no code with the library beyond the Point2 type.

#ifndef NATSET_TESTS_ORACLES_ORACLES_H_
#define NATSET_TESTS_ORACLES_ORACLES_H_

#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "natset/geometry.h"

namespace natset::oracle {

// Jarvis march. Strictly convex vertices only, counterclockwise, starting at
// the lexicographically smallest point.
std::vector<Point2> GiftWrapHull(const std::vector<Point2>& points);

// Even-odd ray casting. Points on the boundary count as inside when
// within `tol` of an edge.
bool PointInPolygon(const std::vector<Point2>& polygon, const Point2& p,
                    double tol);

struct NoFeasibleActiveSet : std::runtime_error {
  NoFeasibleActiveSet() : std::runtime_error("no feasible active set") {}
};

struct EnumerationResult {
  Eigen::VectorXd z;
  Eigen::VectorXd dual;
  double objective = 0.0;
};

// Minimizes 0.5 z'Pz + q'z s.t. Az <= b for positive definite P by trying
// every subset of constraints as the active set and keeping the best
// feasible stationary point with non-negative multipliers.
EnumerationResult EnumerateActiveSets(const Eigen::MatrixXd& P,
                                      const Eigen::VectorXd& q,
                                      const Eigen::MatrixXd& A,
                                      const Eigen::VectorXd& b);

struct SmallQp {
  Eigen::MatrixXd P;
  Eigen::VectorXd q;
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
};

// Random feasible QP with n in [1, 3], k in [0, 4] and P = M'M + 0.1 I. Some
// constraints pass exactly through a random feasible point so that vertex
// (degenerate) optima occur.
SmallQp RandomSmallQp(std::mt19937_64& rng);

}  // namespace natset::oracle

#endif  // NATSET_TESTS_ORACLES_ORACLES_H_
