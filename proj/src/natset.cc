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

#include "natset/natset.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "natset/errors.h"

namespace natset {
namespace {

using json = nlohmann::json;

// Removes up to `trim` points with the largest mean distance to the others,
// never going below kMinSupport points.
std::vector<Point2> TrimIsolated(std::vector<Point2> pts, int trim) {
  const int n = static_cast<int>(pts.size());
  const int remove = std::min(trim, n - kMinSupport);
  if (remove <= 0) return pts;

  std::vector<double> mean_dist(n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) mean_dist[i] += Distance(pts[i], pts[j]);
    mean_dist[i] /= (n - 1);
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return mean_dist[a] > mean_dist[b];
  });
  std::vector<bool> drop(n, false);
  for (int k = 0; k < remove; ++k) drop[order[k]] = true;

  std::vector<Point2> kept;
  kept.reserve(n - remove);
  for (int i = 0; i < n; ++i) {
    if (!drop[i]) kept.push_back(pts[i]);
  }
  return kept;
}

json Rounded(double v) { return RoundSignificant(v); }

double ReadNumber(const json& j) {
  if (!j.is_number()) throw ParseError(0, "natset: expected a number");
  return j.get<double>();
}

const json& Field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(0, std::string("natset: missing field '") + key + "'");
  }
  return j.at(key);
}

}  // namespace

double RoundSignificant(double value) {
  if (!std::isfinite(value) || value == 0.0) return value;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return std::strtod(buf, nullptr);
}

int HorizonRule(const TaskDataset& dataset) {
  std::vector<int> horizons;
  for (const Trajectory& traj : dataset.trajectories) {
    horizons.push_back(traj.horizon());
  }
  if (static_cast<int>(horizons.size()) < kMinSupport) return -1;
  // |D_t| >= k exactly while t is at most the k-th largest horizon.
  std::nth_element(horizons.begin(), horizons.begin() + (kMinSupport - 1),
                   horizons.end(), std::greater<int>());
  return horizons[kMinSupport - 1];
}

ConvexPolygon SliceHull(std::span<const Point2> hull_states) {
  try {
    return QuickHull(hull_states);
  } catch (const DegenerateInput&) {
    std::vector<Point2> inflated;
    inflated.reserve(4 * hull_states.size());
    for (const Point2& p : hull_states) {
      inflated.push_back({p.x + kDegenerateInflation, p.y});
      inflated.push_back({p.x - kDegenerateInflation, p.y});
      inflated.push_back({p.x, p.y + kDegenerateInflation});
      inflated.push_back({p.x, p.y - kDegenerateInflation});
    }
    return QuickHull(inflated);
  }
}

NaturalisticSet BuildNatset(const TaskDataset& dataset,
                            const HullTransform& transform,
                            const BuildOptions& options) {
  if (dataset.trajectories.empty()) {
    throw EmptyTask("cannot build a naturalistic set from an empty dataset");
  }
  const int horizon = HorizonRule(dataset);
  if (horizon < 0) {
    throw InsufficientData(
        "need at least " + std::to_string(kMinSupport) +
        " trajectories to form a hull at t = 0, got " +
        std::to_string(dataset.trajectories.size()));
  }

  NaturalisticSet natset;
  natset.dt = dataset.trajectories.front().dt();
  natset.transform = transform;
  natset.hulls.reserve(horizon + 1);
  for (int t = 0; t <= horizon; ++t) {
    std::vector<Point2> pts = SliceAt(dataset, t, transform).hull_states;
    if (options.trim > 0) pts = TrimIsolated(std::move(pts), options.trim);
    ConvexPolygon poly = SliceHull(pts);
    HalfSpaceSet hs = ToHalfSpaces(poly);
    natset.hulls.push_back(TimedHull{t, std::move(poly), std::move(hs),
                                     static_cast<int>(pts.size())});
  }
  return natset;
}

std::vector<bool> TrajectoryMembership(const NaturalisticSet& natset,
                                       std::span<const StateVec> states,
                                       double tol) {
  std::vector<bool> inside;
  const int last =
      std::min(natset.horizon(), static_cast<int>(states.size()) - 1);
  for (int t = 0; t <= last; ++t) {
    inside.push_back(Contains(natset.hulls[t].halfspaces,
                              natset.transform.Apply(states[t]), tol));
  }
  return inside;
}

std::vector<bool> TrajectoryMembership(const NaturalisticSet& natset,
                                       const Trajectory& traj, double tol) {
  std::vector<StateVec> states;
  states.reserve(traj.states.size());
  for (const RawActorState& s : traj.states) states.push_back(ToStateVec(s));
  return TrajectoryMembership(natset, states, tol);
}

std::vector<HullStats> NatsetStats(const NaturalisticSet& natset) {
  std::vector<HullStats> stats;
  stats.reserve(natset.hulls.size());
  for (const TimedHull& hull : natset.hulls) {
    stats.push_back(
        {hull.t, hull.polygon.size(), hull.polygon.Area(), hull.support});
  }
  return stats;
}

std::string NatsetToJson(const NaturalisticSet& natset) {
  json j;
  j["dt"] = Rounded(natset.dt);
  j["hull_dim"] = 2;
  json transform = json::array();
  for (int r = 0; r < 2; ++r) {
    json row = json::array();
    for (int c = 0; c < kStateDim; ++c) {
      row.push_back(natset.transform.selector()(r, c));
    }
    transform.push_back(row);
  }
  j["transform"] = transform;
  if (!natset.provenance.empty()) {
    j["provenance"] = json::parse(natset.provenance);
  }
  json hulls = json::array();
  for (const TimedHull& hull : natset.hulls) {
    json h;
    h["t"] = hull.t;
    h["support"] = hull.support;
    json verts = json::array();
    for (const Point2& v : hull.polygon.vertices()) {
      verts.push_back({Rounded(v.x), Rounded(v.y)});
    }
    h["vertices"] = verts;
    json g = json::array();
    json offsets = json::array();
    for (int i = 0; i < hull.halfspaces.rows(); ++i) {
      g.push_back(
          {Rounded(hull.halfspaces.G(i, 0)), Rounded(hull.halfspaces.G(i, 1))});
      offsets.push_back(Rounded(hull.halfspaces.h(i)));
    }
    h["G"] = g;
    h["h"] = offsets;
    hulls.push_back(h);
  }
  j["hulls"] = hulls;
  return j.dump() + "\n";
}

namespace {

NaturalisticSet NatsetFromParsed(const json& j) {
  NaturalisticSet natset;
  natset.dt = ReadNumber(Field(j, "dt"));
  if (!(natset.dt > 0.0)) throw ParseError(0, "natset: dt must be positive");
  if (Field(j, "hull_dim") != 2) {
    throw ParseError(0, "natset: only hull_dim 2 is supported");
  }
  const json& transform = Field(j, "transform");
  if (!transform.is_array() || transform.size() != 2) {
    throw ParseError(0, "natset: transform must be a 2 x 4 matrix");
  }
  HullTransform::Selector selector;
  for (int r = 0; r < 2; ++r) {
    if (!transform[r].is_array() || transform[r].size() != kStateDim) {
      throw ParseError(0, "natset: transform must be a 2 x 4 matrix");
    }
    for (int c = 0; c < kStateDim; ++c) {
      selector(r, c) = ReadNumber(transform[r][c]);
    }
  }
  try {
    natset.transform = HullTransform(selector);
  } catch (const InvalidArgument& e) {
    throw ParseError(0, std::string("natset: ") + e.what());
  }
  if (j.contains("provenance")) natset.provenance = j.at("provenance").dump();

  const json& hulls = Field(j, "hulls");
  if (!hulls.is_array() || hulls.empty()) {
    throw ParseError(0, "natset: 'hulls' must be a non-empty array");
  }
  for (const json& h : hulls) {
    const int t = Field(h, "t").get<int>();
    if (t != static_cast<int>(natset.hulls.size())) {
      throw ParseError(0, "natset: hull time indices must be contiguous from 0");
    }
    std::vector<Point2> verts;
    for (const json& v : Field(h, "vertices")) {
      if (!v.is_array() || v.size() != 2) {
        throw ParseError(0, "natset: vertices must be [x, y] pairs");
      }
      verts.push_back({ReadNumber(v[0]), ReadNumber(v[1])});
    }
    const json& g = Field(h, "G");
    const json& offsets = Field(h, "h");
    if (!g.is_array() || !offsets.is_array() || g.size() != offsets.size() ||
        g.empty()) {
      throw ParseError(0, "natset: G and h must have matching row counts");
    }
    HalfSpaceSet hs;
    hs.G.resize(static_cast<int>(g.size()), 2);
    hs.h.resize(static_cast<int>(g.size()));
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!g[i].is_array() || g[i].size() != 2) {
        throw ParseError(0, "natset: G rows must have 2 entries");
      }
      hs.G(i, 0) = ReadNumber(g[i][0]);
      hs.G(i, 1) = ReadNumber(g[i][1]);
      hs.h(i) = ReadNumber(offsets[i]);
    }
    try {
      natset.hulls.push_back(TimedHull{t, ConvexPolygon(std::move(verts)),
                                       std::move(hs),
                                       Field(h, "support").get<int>()});
    } catch (const InvalidArgument& e) {
      throw ParseError(0, "natset: hull at t = " + std::to_string(t) + ": " +
                              e.what());
    }
  }
  return natset;
}

}  // namespace

NaturalisticSet NatsetFromJson(const std::string& json_text) {
  try {
    return NatsetFromParsed(json::parse(json_text));
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("natset: ") + e.what());
  }
}

void WriteNatset(const NaturalisticSet& natset,
                 const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << NatsetToJson(natset);
}

NaturalisticSet ReadNatset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return NatsetFromJson(buffer.str());
}

}  // namespace natset
