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

// The naturalistic set: one convex hull of hull states per time step, from
// t = 0 up to the last step that still has n_c + 1 = 3 supporting states.

#ifndef NATSET_NATSET_H_
#define NATSET_NATSET_H_

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "natset/data.h"
#include "natset/dynamics.h"
#include "natset/geometry.h"

namespace natset {

// Minimum slice size for a full-dimensional planar hull.
inline constexpr int kMinSupport = 3;

// Half-width of the plus-shaped inflation applied to degenerate slices.
inline constexpr double kDegenerateInflation = 1e-6;

struct TimedHull {
  int t = 0;
  ConvexPolygon polygon;
  HalfSpaceSet halfspaces;
  // Number of hull states the polygon was built from.
  int support = 0;
};

struct NaturalisticSet {
  std::vector<TimedHull> hulls;
  double dt = 0.0;
  HullTransform transform = HullTransform::Position();
  // Free-form echo of the task that produced the set, serialized JSON.
  std::string provenance;

  // Last time index H.
  int horizon() const { return static_cast<int>(hulls.size()) - 1; }
};

struct BuildOptions {
  // Drop this many most-isolated points per slice before hulling.
  int trim = 0;
};

// Largest t with |D_t| >= kMinSupport, or -1 if even t = 0 falls short.
int HorizonRule(const TaskDataset& dataset);

// Hull of a slice, inflating collinear or coincident slices.
ConvexPolygon SliceHull(std::span<const Point2> hull_states);

// Throws InsufficientData if t = 0 has fewer than kMinSupport states.
NaturalisticSet BuildNatset(const TaskDataset& dataset,
                            const HullTransform& transform,
                            const BuildOptions& options = {});

// Entry t tells whether the state at t lies in W_t, for t up to
// min(H, states.size() - 1).
std::vector<bool> TrajectoryMembership(const NaturalisticSet& natset,
                                       std::span<const StateVec> states,
                                       double tol);
std::vector<bool> TrajectoryMembership(const NaturalisticSet& natset,
                                       const Trajectory& traj, double tol);

struct HullStats {
  int t = 0;
  int vertex_count = 0;
  double area = 0.0;
  int support = 0;
};

std::vector<HullStats> NatsetStats(const NaturalisticSet& natset);

// Natset JSON with floats rounded to 12 significant digits.
std::string NatsetToJson(const NaturalisticSet& natset);
NaturalisticSet NatsetFromJson(const std::string& json_text);
void WriteNatset(const NaturalisticSet& natset,
                 const std::filesystem::path& path);
NaturalisticSet ReadNatset(const std::filesystem::path& path);

// Rounds to 12 significant decimal digits.
double RoundSignificant(double value);

}  // namespace natset

#endif  // NATSET_NATSET_H_
