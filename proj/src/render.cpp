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

#include "mapchange/render.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "mapchange/errors.hpp"
#include "mapchange/geometry.hpp"
#include "mapchange/metrics.hpp"

namespace mapchange
{

namespace
{

struct Item
{
  const LaneSegment * segment;
  ChangeLabel status;
};

std::string xml_escape(const std::string & s)
{
  std::string out;
  out.reserve(s.size());
  for (const char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      case '\'':
        out += "&apos;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string num(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

class Canvas
{
public:
  Canvas(const Fov & fov, double scale) : fov_(fov), scale_(scale) {}

  double width() const { return (fov_.ymax - fov_.ymin) * scale_; }
  double height() const { return (fov_.xmax - fov_.xmin) * scale_; }

  // Ego x points up, ego y points left.
  std::string points(const Polyline & line) const
  {
    std::string out;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i > 0) {
        out += ' ';
      }
      out += num((fov_.ymax - line[i].y) * scale_) + "," + num((fov_.xmax - line[i].x) * scale_);
    }
    return out;
  }

private:
  Fov fov_;
  double scale_;
};

const std::string & color_for(ChangeLabel status, const RenderStyle & style)
{
  switch (status) {
    case ChangeLabel::Inserted:
      return style.inserted_color;
    case ChangeLabel::Deleted:
      return style.deleted_color;
    case ChangeLabel::Unchanged:
      break;
  }
  return style.unchanged_color;
}

RenderedSvg render(std::vector<Item> items, const Fov & fov, const RenderStyle & style)
{
  if (!fov.well_formed()) {
    throw DataError("render: fov is not well formed");
  }
  if (!(style.px_per_m > 0.0)) {
    throw std::invalid_argument("render: px_per_m must be > 0");
  }
  std::stable_sort(items.begin(), items.end(), [](const Item & a, const Item & b) {
    return a.segment->id < b.segment->id;
  });

  const Canvas canvas(fov, style.px_per_m);
  RenderedSvg out;
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(canvas.width()) << "\" height=\""
      << num(canvas.height()) << "\" viewBox=\"0 0 " << num(canvas.width()) << " " << num(canvas.height())
      << "\">\n";
  svg << "  <rect x=\"0\" y=\"0\" width=\"" << num(canvas.width()) << "\" height=\"" << num(canvas.height())
      << "\" fill=\"" << xml_escape(style.background) << "\"/>\n";
  for (const auto & item : items) {
    const LaneSegment & seg = *item.segment;
    Polygon poly;
    try {
      poly = element_polygon(seg);
    } catch (const DegenerateElement &) {
      out.warnings.push_back("skipped degenerate element '" + seg.id + "'");
      continue;
    }
    const std::string color = xml_escape(color_for(item.status, style));
    const std::string dash = item.status == ChangeLabel::Deleted
                               ? " stroke-dasharray=\"" + xml_escape(style.deleted_dasharray) + "\""
                               : std::string();
    svg << "  <g id=\"" << xml_escape(seg.id) << "\" class=\"" << to_string(seg.element_class) << " "
        << to_string(item.status) << "\">\n";
    svg << "    <polygon points=\"" << canvas.points(poly.ring) << "\" fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"" << num(style.polygon_stroke_px) << "\"" << dash << "/>\n";
    svg << "    <polyline points=\"" << canvas.points(seg.centerline) << "\" fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"" << num(style.centerline_stroke_px) << "\"" << dash << "/>\n";
    svg << "  </g>\n";
  }
  svg << "</svg>\n";
  out.svg = svg.str();
  return out;
}

}  // namespace

RenderedSvg render_change_map(const FrameGroundTruth & gt, const RenderStyle & style)
{
  std::vector<Item> items;
  items.reserve(gt.elements.size());
  for (const auto & e : gt.elements) {
    items.push_back({&e.element, e.label});
  }
  return render(std::move(items), gt.fov, style);
}

RenderedSvg render_change_map(
  const FramePrediction & pred, const Fov & fov, const RenderStyle & style, double epsilon)
{
  std::vector<Item> items;
  items.reserve(pred.elements.size());
  for (const auto & e : pred.elements) {
    if (e.score >= epsilon) {
      items.push_back({&e.geometry, predicted_status(e)});
    }
  }
  return render(std::move(items), fov, style);
}

}  // namespace mapchange
