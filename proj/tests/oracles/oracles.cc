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

#include "oracles/oracles.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace natset::oracle {
namespace {

double Orient(const Point2& a, const Point2& b, const Point2& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

double SquaredLength(const Point2& a, const Point2& b) {
  return (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y);
}

double SegmentDistance(const Point2& a, const Point2& b, const Point2& p) {
  const double len2 = SquaredLength(a, b);
  double s = len2 > 0.0
                 ? ((p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y)) /
                       len2
                 : 0.0;
  s = std::clamp(s, 0.0, 1.0);
  const Point2 q{a.x + s * (b.x - a.x), a.y + s * (b.y - a.y)};
  return std::sqrt(SquaredLength(p, q));
}

}  // namespace

std::vector<Point2> GiftWrapHull(const std::vector<Point2>& points) {
  if (points.size() < 3) return {};
  const auto start_it = std::min_element(
      points.begin(), points.end(), [](const Point2& a, const Point2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
      });
  const Point2 start = *start_it;
  std::vector<Point2> hull;
  Point2 current = start;
  do {
    hull.push_back(current);
    // Next vertex: the point with every other point to its left, taking the
    // farthest one when several are collinear with the current edge.
    Point2 next = current;
    for (const Point2& cand : points) {
      if (cand == current) continue;
      if (next == current) {
        next = cand;
        continue;
      }
      const double o = Orient(current, next, cand);
      if (o < 0.0 ||
          (o == 0.0 &&
           SquaredLength(current, cand) > SquaredLength(current, next))) {
        next = cand;
      }
    }
    current = next;
    if (hull.size() > points.size()) return {};
  } while (!(current == start));
  return hull;
}

bool PointInPolygon(const std::vector<Point2>& polygon, const Point2& p,
                    double tol) {
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (SegmentDistance(polygon[i], polygon[(i + 1) % n], p) <= tol) {
      return true;
    }
  }
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2& a = polygon[i];
    const Point2& b = polygon[j];
    if ((a.y > p.y) != (b.y > p.y) &&
        p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x) {
      inside = !inside;
    }
  }
  return inside;
}

EnumerationResult EnumerateActiveSets(const Eigen::MatrixXd& P,
                                      const Eigen::VectorXd& q,
                                      const Eigen::MatrixXd& A,
                                      const Eigen::VectorXd& b) {
  constexpr double kFeasTol = 1e-9;
  const int n = static_cast<int>(q.size());
  const int k = static_cast<int>(b.size());
  EnumerationResult best;
  best.objective = std::numeric_limits<double>::infinity();
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> active;
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i)) active.push_back(i);
    }
    const int m = static_cast<int>(active.size());
    if (m > n) continue;
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(n + m, n + m);
    Eigen::VectorXd rhs(n + m);
    kkt.topLeftCorner(n, n) = P;
    rhs.head(n) = -q;
    for (int r = 0; r < m; ++r) {
      kkt.block(0, n + r, n, 1) = A.row(active[r]).transpose();
      kkt.block(n + r, 0, 1, n) = A.row(active[r]);
      rhs(n + r) = b(active[r]);
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(kkt);
    if (!lu.isInvertible()) continue;
    const Eigen::VectorXd sol = lu.solve(rhs);
    const Eigen::VectorXd z = sol.head(n);
    const Eigen::VectorXd mu = sol.tail(m);
    if (m > 0 && mu.minCoeff() < -kFeasTol) continue;
    if (k > 0 && (A * z - b).maxCoeff() > kFeasTol) continue;
    const double obj = 0.5 * z.dot(P * z) + q.dot(z);
    if (obj < best.objective) {
      best.objective = obj;
      best.z = z;
      best.dual = Eigen::VectorXd::Zero(k);
      for (int r = 0; r < m; ++r) best.dual(active[r]) = mu(r);
    }
  }
  if (!std::isfinite(best.objective)) throw NoFeasibleActiveSet();
  return best;
}

SmallQp RandomSmallQp(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dim(1, 3);
  std::uniform_int_distribution<int> rows(0, 4);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int n = dim(rng);
  const int k = rows(rng);
  auto gaussian = [&](int r, int c) {
    Eigen::MatrixXd m(r, c);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < c; ++j) m(i, j) = g(rng);
    }
    return m;
  };
  SmallQp qp;
  const Eigen::MatrixXd M = gaussian(n, n);
  qp.P = M.transpose() * M + 0.1 * Eigen::MatrixXd::Identity(n, n);
  qp.q = 3.0 * gaussian(n, 1);
  qp.A = gaussian(k, n);
  const Eigen::VectorXd z0 = gaussian(n, 1);
  qp.b = qp.A * z0;
  for (int i = 0; i < k; ++i) {
    if (u(rng) < 0.7) qp.b(i) += u(rng);
  }
  return qp;
}

}  // namespace natset::oracle
