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

#include "natset/svg.h"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "natset/errors.h"

namespace natset {
namespace {

using json = nlohmann::json;

constexpr double kCanvasWidth = 800.0;
constexpr double kMargin = 20.0;
constexpr double kMinOpacity = 0.05;
constexpr double kOpacitySpan = 0.45;

std::string Fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::vector<StateVec> ReadStates(const json& j, const char* key) {
  std::vector<StateVec> states;
  if (!j.contains(key)) return states;
  const json& arr = j.at(key);
  if (!arr.is_array()) {
    throw ParseError(0, std::string("projection: '") + key +
                            "' must be an array");
  }
  for (const json& s : arr) {
    if (!s.is_array() || s.size() != kStateDim) {
      throw ParseError(0, std::string("projection: '") + key +
                              "' entries must have 4 components");
    }
    states.push_back({s[0].get<double>(), s[1].get<double>(),
                      s[2].get<double>(), s[3].get<double>()});
  }
  return states;
}

class Canvas {
 public:
  Canvas(double xmin, double xmax, double ymin, double ymax)
      : xmin_(xmin), ymax_(ymax) {
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
    scale_ = (kCanvasWidth - 2.0 * kMargin) / span;
    height_ = (ymax - ymin) * scale_ + 2.0 * kMargin;
  }

  double height() const { return height_; }

  std::string Point(double x, double y) const {
    return Fixed((x - xmin_) * scale_ + kMargin) + "," +
           Fixed((ymax_ - y) * scale_ + kMargin);
  }

 private:
  double xmin_;
  double ymax_;
  double scale_ = 1.0;
  double height_ = 0.0;
};

}  // namespace

PathOverlay OverlayFromProjectionJson(const std::string& json_text) {
  try {
    const json j = json::parse(json_text);
    return PathOverlay{ReadStates(j, "candidate"), ReadStates(j, "states")};
  } catch (const json::exception& e) {
    throw ParseError(0, std::string("projection: ") + e.what());
  }
}

std::string RenderSvg(const NaturalisticSet& natset,
                      const std::optional<PathOverlay>& overlay) {
  double xmin = std::numeric_limits<double>::infinity();
  double ymin = xmin;
  double xmax = -xmin;
  double ymax = -xmin;
  auto extend = [&](const Point2& p) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  };
  double min_area = std::numeric_limits<double>::infinity();
  for (const TimedHull& hull : natset.hulls) {
    for (const Point2& v : hull.polygon.vertices()) extend(v);
    min_area = std::min(min_area, hull.polygon.Area());
  }
  std::vector<const std::vector<StateVec>*> paths;
  if (overlay) {
    for (const auto* path : {&overlay->candidate, &overlay->projected}) {
      if (path->empty()) continue;
      paths.push_back(path);
      for (const StateVec& s : *path) extend(natset.transform.Apply(s));
    }
  }
  if (natset.hulls.empty() && paths.empty()) {
    xmin = ymin = 0.0;
    xmax = ymax = 1.0;
  }

  const Canvas canvas(xmin, xmax, ymin, ymax);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << Fixed(kCanvasWidth) << "\" height=\"" << Fixed(canvas.height())
      << "\">\n";
  for (const TimedHull& hull : natset.hulls) {
    const double opacity =
        kMinOpacity + kOpacitySpan * (min_area / hull.polygon.Area());
    out << "  <polygon data-t=\"" << hull.t << "\" points=\"";
    bool first = true;
    for (const Point2& v : hull.polygon.vertices()) {
      if (!first) out << ' ';
      out << canvas.Point(v.x, v.y);
      first = false;
    }
    out << "\" fill=\"#2a7ab0\" fill-opacity=\"" << Fixed(opacity)
        << "\" stroke=\"#1b4f72\" stroke-width=\"0.5\"/>\n";
  }
  static constexpr const char* kColors[] = {"#c0392b", "#27ae60"};
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const bool is_candidate = paths[i] == &overlay->candidate;
    out << "  <polyline class=\"" << (is_candidate ? "candidate" : "projected")
        << "\" points=\"";
    bool first = true;
    for (const StateVec& s : *paths[i]) {
      const Point2 y = natset.transform.Apply(s);
      if (!first) out << ' ';
      out << canvas.Point(y.x, y.y);
      first = false;
    }
    out << "\" fill=\"none\" stroke=\"" << kColors[is_candidate ? 0 : 1]
        << "\" stroke-width=\"2\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace natset
