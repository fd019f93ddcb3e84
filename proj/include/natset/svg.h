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

#ifndef NATSET_SVG_H_
#define NATSET_SVG_H_

#include <optional>
#include <string>
#include <vector>

#include "natset/dynamics.h"
#include "natset/natset.h"

namespace natset {

struct PathOverlay {
  std::vector<StateVec> candidate;
  std::vector<StateVec> projected;
};

// Reads the "candidate" and "states" arrays of a projection JSON file.
PathOverlay OverlayFromProjectionJson(const std::string& json_text);

// One <polygon> per hull, small hulls drawn more opaque, plus one <polyline>
// per non-empty overlay path. Output depends only on the inputs.
std::string RenderSvg(const NaturalisticSet& natset,
                      const std::optional<PathOverlay>& overlay = std::nullopt);

}  // namespace natset

#endif  // NATSET_SVG_H_
