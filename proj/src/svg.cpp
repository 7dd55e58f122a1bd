// Copyright 2026 The polysimp Authors
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

#include <algorithm>
#include <limits>
#include <sstream>

#include "polysimp/io.hpp"

namespace polysimp {

namespace {

struct Box
{
  Point lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Point hi{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};

  bool valid() const { return lo.x() <= hi.x() && lo.y() <= hi.y(); }
  void add(const Point& p)
  {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
};

void add_records(Box& box, const std::vector<FeatureRecord>* records)
{
  if (!records)
    return;
  for (const auto& r : *records) {
    if (!r.geometry)
      continue;
    for (const auto& p : r.geometry->exterior.vertices())
      box.add(p);
    for (const auto& hole : r.geometry->holes)
      for (const auto& p : hole.vertices())
        box.add(p);
  }
}

std::string escape(const std::string& s)
{
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

class PathWriter
{
public:
  PathWriter(const Box& box, double dx) : flip_(box.lo.y() + box.hi.y()), dx_(dx) {}

  std::string polygon(const Polygon& polygon) const
  {
    std::ostringstream d;
    ring(polygon.exterior, d);
    for (const auto& hole : polygon.holes)
      ring(hole, d);
    return d.str();
  }

private:
  void ring(const Ring& ring, std::ostringstream& d) const
  {
    const auto& v = ring.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
      d << (i ? " L" : (d.tellp() > 0 ? " M" : "M")) << format_number(v[i].x() + dx_) << ' '
        << format_number(flip_ - v[i].y());
    }
    d << " Z";
  }

  double flip_;
  double dx_;
};

}  // namespace

std::string render_svg_panels(const std::vector<SvgPanel>& panels, const SvgOptions& options)
{
  Box box;
  for (const auto& panel : panels) {
    add_records(box, panel.base);
    add_records(box, panel.overlay);
  }
  if (panels.empty() || !box.valid())
    throw GeometryError(ErrorCode::NothingToRender, "no live ring to render");

  const Point size = box.hi - box.lo;
  const double margin = options.margin * std::max(size.x(), size.y());
  const double panel_width = size.x() + 2 * margin;
  const double width = panel_width * static_cast<double>(panels.size());
  const double height = size.y() + 2 * margin;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
      << format_number(box.lo.x() - margin) << ' ' << format_number(box.lo.y() - margin) << ' '
      << format_number(width) << ' ' << format_number(height) << "\">\n";
  if (!options.title.empty())
    svg << "<title>" << escape(options.title) << "</title>\n";
  svg << "<defs><pattern id=\"hatch\" patternUnits=\"userSpaceOnUse\" width=\""
      << format_number(margin) << "\" height=\"" << format_number(margin)
      << "\" patternTransform=\"rotate(45)\"><line x1=\"0\" y1=\"0\" x2=\"0\" y2=\""
      << format_number(margin) << "\" stroke=\"#c33\" stroke-width=\"" << options.stroke_width
      << "\" vector-effect=\"non-scaling-stroke\"/></pattern></defs>\n";

  const std::string stroke = " fill-rule=\"evenodd\" vector-effect=\"non-scaling-stroke\" stroke-width=\"" +
                             format_number(options.stroke_width) + "\"";
  std::size_t notes = 0;
  std::ostringstream note_layer;
  for (std::size_t i = 0; i < panels.size(); ++i) {
    const auto& panel = panels[i];
    const PathWriter paths(box, panel_width * static_cast<double>(i));
    svg << "<g id=\"panel-" << i << "\">\n";
    if (!panel.title.empty())
      svg << "<title>" << escape(panel.title) << "</title>\n";
    if (panel.base) {
      svg << "<g class=\"before\" stroke=\"#999\" fill=\"none\">\n";
      for (std::size_t k = 0; k < panel.base->size(); ++k) {
        const auto& r = (*panel.base)[k];
        if (!r.geometry)
          continue;
        const bool gone = panel.overlay && k < panel.overlay->size() && !(*panel.overlay)[k].geometry;
        svg << "<path d=\"" << paths.polygon(*r.geometry) << '"' << stroke
            << (gone ? " fill=\"url(#hatch)\"" : "") << "/>\n";
        notes += gone;
      }
      svg << "</g>\n";
    }
    if (panel.overlay) {
      svg << "<g class=\"after\" stroke=\"#000\" fill=\"none\">\n";
      for (const auto& r : *panel.overlay) {
        if (r.geometry)
          svg << "<path d=\"" << paths.polygon(*r.geometry) << '"' << stroke << "/>\n";
      }
      svg << "</g>\n";
    }
    svg << "</g>\n";
  }
  svg << "<g id=\"notes\">";
  if (notes)
    svg << "<desc>" << notes << " feature(s) vanished</desc>";
  svg << "</g>\n</svg>\n";
  return svg.str();
}

std::string render_svg(const std::vector<FeatureRecord>& before,
                       const std::vector<FeatureRecord>& after, const SvgOptions& options)
{
  if (before.empty() && after.empty())
    throw GeometryError(ErrorCode::NothingToRender, "empty record list");
  return render_svg_panels({SvgPanel{"", &before, after.empty() ? nullptr : &after}}, options);
}

}  // namespace polysimp
