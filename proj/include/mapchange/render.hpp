// Copyright 2026 The mapchange Authors
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

#ifndef MAPCHANGE__RENDER_HPP_
#define MAPCHANGE__RENDER_HPP_

#include <string>
#include <vector>

#include "mapchange/change_synthesis.hpp"
#include "mapchange/dataset.hpp"

namespace mapchange
{

/// Change-map colours: inserted green, deleted dashed red, unchanged grey.
struct RenderStyle
{
  std::string inserted_color{"#2ca02c"};
  std::string deleted_color{"#d62728"};
  std::string unchanged_color{"#8c8c8c"};
  std::string deleted_dasharray{"6 4"};
  double polygon_stroke_px{2.0};
  double centerline_stroke_px{1.0};
  double px_per_m{10.0};
  std::string background{"#ffffff"};
};

struct RenderedSvg
{
  std::string svg;
  /// One entry per element skipped as degenerate.
  std::vector<std::string> warnings;
};

RenderedSvg render_change_map(const FrameGroundTruth & gt, const RenderStyle & style = {});

/// Predicted elements below `epsilon` are not drawn.
RenderedSvg render_change_map(
  const FramePrediction & pred, const Fov & fov, const RenderStyle & style = {}, double epsilon = 0.0);

}  // namespace mapchange

#endif  // MAPCHANGE__RENDER_HPP_
