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

#include "natset/data.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string_view>
#include <unordered_map>
#include <utility>

#include "json.hpp"
#include "natset/errors.h"

namespace natset {
namespace {

using json = nlohmann::json;

constexpr std::array<std::string_view, 9> kRequiredColumns = {
    "trackId",       "frame",         "xCenter",
    "yCenter",       "xVelocity",     "yVelocity",
    "xAcceleration", "yAcceleration", "heading"};

enum Column {
  kTrackId,
  kFrame,
  kX,
  kY,
  kVx,
  kVy,
  kAx,
  kAy,
  kHeading,
};

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> SplitCsv(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t begin = 0;
  while (true) {
    const std::size_t comma = line.find(',', begin);
    if (comma == std::string_view::npos) {
      fields.push_back(Trim(line.substr(begin)));
      return fields;
    }
    fields.push_back(Trim(line.substr(begin, comma - begin)));
    begin = comma + 1;
  }
}

double ParseDouble(std::string_view field, std::string_view column,
                   std::int64_t line) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() ||
      !std::isfinite(value)) {
    throw ParseError(line, "column " + std::string(column) +
                               ": not a finite number: '" +
                               std::string(field) + "'");
  }
  return value;
}

std::int64_t ParseFrame(std::string_view field, std::int64_t line) {
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || value < 0) {
    throw ParseError(line, "column frame: not a non-negative integer: '" +
                               std::string(field) + "'");
  }
  return value;
}

struct Row {
  std::int64_t frame;
  std::int64_t line;
  RawActorState state;
};

std::vector<Point2> ParsePolygonPoints(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw ParseError(0, std::string("task config: missing array '") + key +
                            "'");
  }
  std::vector<Point2> pts;
  for (const json& p : j.at(key)) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() ||
        !p[1].is_number()) {
      throw ParseError(0, std::string("task config: '") + key +
                              "' entries must be [x, y] pairs");
    }
    pts.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return pts;
}

json PolygonToJson(const ConvexPolygon& poly) {
  json arr = json::array();
  for (const Point2& v : poly.vertices()) arr.push_back({v.x, v.y});
  return arr;
}

}  // namespace

StateVec ToStateVec(const RawActorState& s) {
  return {s.position.x, s.velocity.x(), s.position.y, s.velocity.y()};
}

std::vector<Trajectory> ParseTrajectories(std::istream& in,
                                          double frame_rate) {
  if (!(frame_rate > 0.0)) {
    throw NonPositiveParameter("frame rate must be positive");
  }
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing header row");

  const std::vector<std::string_view> header = SplitCsv(line);
  std::array<int, kRequiredColumns.size()> index;
  for (std::size_t c = 0; c < kRequiredColumns.size(); ++c) {
    const auto it = std::find(header.begin(), header.end(), kRequiredColumns[c]);
    if (it == header.end()) {
      throw ParseError(1, "header lacks column " +
                              std::string(kRequiredColumns[c]));
    }
    index[c] = static_cast<int>(it - header.begin());
  }
  const std::size_t num_columns = header.size();

  std::vector<std::string> order;
  std::unordered_map<std::string, std::vector<Row>> rows;
  std::int64_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const std::vector<std::string_view> fields = SplitCsv(line);
    if (fields.size() != num_columns) {
      throw ParseError(line_no, "expected " + std::to_string(num_columns) +
                                    " fields, found " +
                                    std::to_string(fields.size()));
    }
    const std::string id(fields[index[kTrackId]]);
    if (id.empty()) throw ParseError(line_no, "empty trackId");

    Row row;
    row.line = line_no;
    row.frame = ParseFrame(fields[index[kFrame]], line_no);
    auto num = [&](Column c) {
      return ParseDouble(fields[index[c]], kRequiredColumns[c], line_no);
    };
    row.state.position = {num(kX), num(kY)};
    row.state.velocity = {num(kVx), num(kVy)};
    row.state.acceleration = {num(kAx), num(kAy)};
    row.state.heading = num(kHeading);

    auto [it, inserted] = rows.try_emplace(id);
    if (inserted) order.push_back(id);
    it->second.push_back(row);
  }

  std::vector<Trajectory> out;
  out.reserve(order.size());
  for (const std::string& id : order) {
    std::vector<Row>& actor_rows = rows.at(id);
    std::stable_sort(actor_rows.begin(), actor_rows.end(),
                     [](const Row& a, const Row& b) { return a.frame < b.frame; });
    for (std::size_t k = 1; k < actor_rows.size(); ++k) {
      const std::int64_t prev = actor_rows[k - 1].frame;
      if (actor_rows[k].frame == prev) {
        throw ParseError(actor_rows[k].line,
                         "duplicate frame " + std::to_string(prev) +
                             " for actor " + id);
      }
      if (actor_rows[k].frame != prev + 1) throw GapError(id, prev + 1);
    }
    if (actor_rows.size() < 2) {
      std::clog << "warning: actor " << id
                << " has a single frame and is skipped\n";
      continue;
    }
    Trajectory traj;
    traj.actor_id = id;
    traj.frame_rate = frame_rate;
    traj.first_frame = actor_rows.front().frame;
    traj.states.reserve(actor_rows.size());
    for (const Row& r : actor_rows) traj.states.push_back(r.state);
    out.push_back(std::move(traj));
  }
  return out;
}

std::vector<Trajectory> LoadTrajectories(const std::filesystem::path& path,
                                         double frame_rate) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return ParseTrajectories(in, frame_rate);
}

Region::Region(ConvexPolygon poly)
    : polygon(std::move(poly)), halfspaces(ToHalfSpaces(polygon)) {}

bool Region::Contains(const Point2& p) const {
  return natset::Contains(halfspaces, p, kGeometryTolerance);
}

TaskConfig ParseTaskConfig(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("task config: ") + e.what());
  }
  if (!j.is_object()) throw ParseError(0, "task config must be an object");

  auto region = [&](const char* key) {
    const std::vector<Point2> pts = ParsePolygonPoints(j, key);
    try {
      return Region(QuickHull(pts));
    } catch (const Error& e) {
      throw ParseError(0, std::string("task config: '") + key +
                              "' is not a proper polygon: " + e.what());
    }
  };
  auto number = [&](const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number()) {
      throw ParseError(0, std::string("task config: '") + key +
                              "' must be a number");
    }
    return j.at(key).get<double>();
  };

  TaskConfig config{Task{region("start_polygon"), region("end_polygon"),
                         number("min_speed", kDefaultMinSpeed)},
                    number("frame_rate", kDefaultFrameRate)};
  if (config.task.min_speed < 0.0) {
    throw ParseError(0, "task config: min_speed must be non-negative");
  }
  if (!(config.frame_rate > 0.0)) {
    throw ParseError(0, "task config: frame_rate must be positive");
  }
  return config;
}

TaskConfig LoadTaskConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseTaskConfig(buffer.str());
}

std::string TaskConfigToJson(const TaskConfig& config) {
  json j;
  j["start_polygon"] = PolygonToJson(config.task.start.polygon);
  j["end_polygon"] = PolygonToJson(config.task.end.polygon);
  j["min_speed"] = config.task.min_speed;
  j["frame_rate"] = config.frame_rate;
  return j.dump(2) + "\n";
}

TaskDataset FilterTask(const std::vector<Trajectory>& trajectories,
                       const Task& task) {
  TaskDataset dataset{{}, task};
  for (const Trajectory& traj : trajectories) {
    const auto entry =
        std::find_if(traj.states.begin(), traj.states.end(),
                     [&](const RawActorState& s) {
                       return task.start.Contains(s.position);
                     });
    if (entry == traj.states.end()) continue;

    const auto offset = entry - traj.states.begin();
    if (traj.states.end() - entry < 2) {
      std::clog << "warning: actor " << traj.actor_id
                << " has fewer than 2 states after entering the start region"
                   " and is skipped\n";
      continue;
    }
    double max_speed = 0.0;
    for (auto it = entry; it != traj.states.end(); ++it) {
      max_speed = std::max(max_speed, it->velocity.norm());
    }
    if (max_speed < task.min_speed) continue;
    if (!task.end.Contains(traj.states.back().position)) continue;

    Trajectory kept;
    kept.actor_id = traj.actor_id;
    kept.frame_rate = traj.frame_rate;
    kept.first_frame = traj.first_frame + offset;
    kept.states.assign(entry, traj.states.end());
    dataset.trajectories.push_back(std::move(kept));
  }
  if (dataset.trajectories.empty()) {
    throw EmptyTask("no trajectory moves from the start region to the end "
                    "region at the required speed");
  }
  return dataset;
}

HullTransform::HullTransform(const Selector& selector) : selector_(selector) {
  for (int r = 0; r < selector_.rows(); ++r) {
    int ones = 0;
    for (int c = 0; c < selector_.cols(); ++c) {
      const double v = selector_(r, c);
      if (v == 1.0) {
        ++ones;
      } else if (v != 0.0) {
        throw InvalidArgument("hull transform must be a 0/1 selector matrix");
      }
    }
    if (ones != 1) {
      throw InvalidArgument("each hull transform row must select exactly one "
                            "state coordinate");
    }
  }
}

HullTransform HullTransform::Position() {
  Selector s = Selector::Zero();
  s(0, 0) = 1.0;
  s(1, 2) = 1.0;
  return HullTransform(s);
}

Point2 HullTransform::Apply(const StateVec& x) const {
  const Eigen::Vector2d y = selector_ * x.ToVector();
  return {y(0), y(1)};
}

TimeSlice SliceAt(const TaskDataset& dataset, int t,
                  const HullTransform& transform) {
  TimeSlice slice;
  slice.t = t;
  if (t < 0) return slice;
  for (const Trajectory& traj : dataset.trajectories) {
    if (traj.horizon() >= t) {
      slice.hull_states.push_back(transform.Apply(ToStateVec(traj.states[t])));
    }
  }
  return slice;
}

}  // namespace natset
