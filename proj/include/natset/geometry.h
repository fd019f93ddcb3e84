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

// Planar convex hulls and their half-space descriptions.

#ifndef NATSET_GEOMETRY_H_
#define NATSET_GEOMETRY_H_

#include <span>
#include <vector>

#include <Eigen/Core>

namespace natset {

// Collinearity / extreme-point tolerance, meters.
inline constexpr double kGeometryTolerance = 1e-9;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
  Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
  Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
  Point2 operator*(double s) const { return {x * s, y * s}; }
};

// z-component of (b - a) x (c - a); positive when c is left of a->b.
double Cross(const Point2& a, const Point2& b, const Point2& c);
double Distance(const Point2& a, const Point2& b);

// Counterclockwise convex polygon whose vertices are all extreme points.
class ConvexPolygon {
 public:
  // Validates the invariants and throws InvalidArgument on violation. Use
  // QuickHull() to build a polygon from an arbitrary point cloud.
  explicit ConvexPolygon(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return vertices_; }
  int size() const { return static_cast<int>(vertices_.size()); }

  // Shoelace area, strictly positive.
  double Area() const;
  Point2 Centroid() const;

 private:
  std::vector<Point2> vertices_;
};

// {y : G y <= h}, one row per polygon edge with unit-norm rows.
struct HalfSpaceSet {
  Eigen::Matrix<double, Eigen::Dynamic, 2> G;
  Eigen::VectorXd h;

  int rows() const { return static_cast<int>(h.size()); }
};

// Quickhull over a planar point set. Duplicates (on a 1e-9 grid) are merged
// first. Throws DegenerateInput when fewer than three distinct points remain
// or all of them lie within kGeometryTolerance of one line.
ConvexPolygon QuickHull(std::span<const Point2> points);

HalfSpaceSet ToHalfSpaces(const ConvexPolygon& poly);

// max_i (G_i p - h_i); non-positive iff p is inside.
double SignedViolation(const HalfSpaceSet& hs, const Point2& p);

bool Contains(const HalfSpaceSet& hs, const Point2& p, double tol);

}  // namespace natset

#endif  // NATSET_GEOMETRY_H_
