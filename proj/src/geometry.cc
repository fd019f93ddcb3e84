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

#include "natset/geometry.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <utility>

#include "natset/errors.h"

namespace natset {
namespace {

// Signed distance of p from the directed line a->b; positive on the left.
double LineDistance(const Point2& a, const Point2& b, const Point2& p) {
  return Cross(a, b, p) / Distance(a, b);
}

bool LexLess(const Point2& a, const Point2& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

// Removes points that coincide on the 1e-9 grid, keeping the first (lowest
// index) occurrence and the original input order.
std::vector<Point2> Deduplicate(std::span<const Point2> points) {
  std::map<std::pair<double, double>, bool> seen;
  std::vector<Point2> unique;
  unique.reserve(points.size());
  for (const Point2& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw InvalidArgument("hull input contains a non-finite coordinate");
    }
    const auto key = std::make_pair(std::round(p.x / kGeometryTolerance),
                                    std::round(p.y / kGeometryTolerance));
    if (seen.emplace(key, true).second) unique.push_back(p);
  }
  return unique;
}

// Appends, in order, the hull vertices strictly right of p->q. `candidates`
// holds indices into `pts`, ascending, all strictly right of p->q.
void FindHull(const std::vector<Point2>& pts, const Point2& p, const Point2& q,
              const std::vector<int>& candidates, std::vector<Point2>& out) {
  if (candidates.empty()) return;

  // Farthest from the dividing line; strict comparison keeps the lowest index.
  int far = -1;
  double far_dist = -1.0;
  for (int i : candidates) {
    const double d = -LineDistance(p, q, pts[i]);
    if (d > far_dist) {
      far_dist = d;
      far = i;
    }
  }
  const Point2 c = pts[far];

  std::vector<int> left_side, right_side;
  for (int i : candidates) {
    if (i == far) continue;
    if (-LineDistance(p, c, pts[i]) > kGeometryTolerance) {
      left_side.push_back(i);
    } else if (-LineDistance(c, q, pts[i]) > kGeometryTolerance) {
      right_side.push_back(i);
    }
  }
  FindHull(pts, p, c, left_side, out);
  out.push_back(c);
  FindHull(pts, c, q, right_side, out);
}

// Drops vertices whose triangle with both neighbours has a height at or
// below the tolerance.
void RemoveFlatVertices(std::vector<Point2>& verts) {
  bool changed = true;
  while (changed && verts.size() > 3) {
    changed = false;
    const int n = static_cast<int>(verts.size());
    for (int i = 0; i < n; ++i) {
      const Point2& prev = verts[(i + n - 1) % n];
      const Point2& next = verts[(i + 1) % n];
      const double longest =
          std::max({Distance(prev, verts[i]), Distance(verts[i], next),
                    Distance(prev, next)});
      if (Cross(prev, verts[i], next) / longest <= kGeometryTolerance) {
        verts.erase(verts.begin() + i);
        changed = true;
        break;
      }
    }
  }
}

}  // namespace

double Cross(const Point2& a, const Point2& b, const Point2& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

double Distance(const Point2& a, const Point2& b) {
  return std::hypot(b.x - a.x, b.y - a.y);
}

ConvexPolygon::ConvexPolygon(std::vector<Point2> vertices)
    : vertices_(std::move(vertices)) {
  const int n = size();
  if (n < 3) {
    throw InvalidArgument("convex polygon needs at least 3 vertices, got " +
                          std::to_string(n));
  }
  for (const Point2& v : vertices_) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
      throw InvalidArgument("polygon vertex is not finite");
    }
  }
  for (int i = 0; i < n; ++i) {
    const Point2& a = vertices_[i];
    const Point2& b = vertices_[(i + 1) % n];
    if (Distance(a, b) <= kGeometryTolerance) {
      throw InvalidArgument("polygon has duplicate vertices");
    }
    for (int j = 0; j < n; ++j) {
      if (j == i || j == (i + 1) % n) continue;
      if (LineDistance(a, b, vertices_[j]) <= kGeometryTolerance) {
        throw InvalidArgument(
            "polygon is not strictly convex and counterclockwise");
      }
    }
  }
  if (Area() <= 0.0) {
    throw InvalidArgument("polygon has non-positive signed area");
  }
}

double ConvexPolygon::Area() const {
  double twice = 0.0;
  const int n = size();
  for (int i = 0; i < n; ++i) {
    const Point2& a = vertices_[i];
    const Point2& b = vertices_[(i + 1) % n];
    twice += a.x * b.y - b.x * a.y;
  }
  return 0.5 * twice;
}

Point2 ConvexPolygon::Centroid() const {
  // Shift to the first vertex to keep the products well scaled.
  const Point2 o = vertices_.front();
  double twice_area = 0.0, cx = 0.0, cy = 0.0;
  const int n = size();
  for (int i = 0; i < n; ++i) {
    const Point2 a = vertices_[i] - o;
    const Point2 b = vertices_[(i + 1) % n] - o;
    const double w = a.x * b.y - b.x * a.y;
    twice_area += w;
    cx += (a.x + b.x) * w;
    cy += (a.y + b.y) * w;
  }
  return Point2{cx / (3.0 * twice_area), cy / (3.0 * twice_area)} + o;
}

ConvexPolygon QuickHull(std::span<const Point2> points) {
  const std::vector<Point2> pts = Deduplicate(points);
  if (pts.size() < 3) {
    throw DegenerateInput("need at least 3 distinct points for a hull, got " +
                          std::to_string(pts.size()));
  }

  int lo = 0, hi = 0;
  for (int i = 1; i < static_cast<int>(pts.size()); ++i) {
    if (LexLess(pts[i], pts[lo])) lo = i;
    if (LexLess(pts[hi], pts[i])) hi = i;
  }
  const Point2 a = pts[lo];
  const Point2 b = pts[hi];

  std::vector<int> below, above;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
    if (i == lo || i == hi) continue;
    const double d = LineDistance(a, b, pts[i]);
    if (d < -kGeometryTolerance) {
      below.push_back(i);
    } else if (d > kGeometryTolerance) {
      above.push_back(i);
    }
  }
  if (below.empty() && above.empty()) {
    throw DegenerateInput("all hull input points are collinear");
  }

  std::vector<Point2> verts{a};
  FindHull(pts, a, b, below, verts);
  verts.push_back(b);
  FindHull(pts, b, a, above, verts);
  RemoveFlatVertices(verts);
  return ConvexPolygon(std::move(verts));
}

HalfSpaceSet ToHalfSpaces(const ConvexPolygon& poly) {
  const auto& v = poly.vertices();
  const int n = poly.size();
  HalfSpaceSet hs;
  hs.G.resize(n, 2);
  hs.h.resize(n);
  for (int i = 0; i < n; ++i) {
    const Point2& a = v[i];
    const Point2& b = v[(i + 1) % n];
    const double len = Distance(a, b);
    // Outward normal of a counterclockwise edge.
    const double nx = (b.y - a.y) / len;
    const double ny = -(b.x - a.x) / len;
    hs.G(i, 0) = nx;
    hs.G(i, 1) = ny;
    hs.h(i) = nx * a.x + ny * a.y;
  }
  return hs;
}

double SignedViolation(const HalfSpaceSet& hs, const Point2& p) {
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < hs.rows(); ++i) {
    worst = std::max(worst, hs.G(i, 0) * p.x + hs.G(i, 1) * p.y - hs.h(i));
  }
  return worst;
}

bool Contains(const HalfSpaceSet& hs, const Point2& p, double tol) {
  return SignedViolation(hs, p) <= tol;
}

}  // namespace natset
