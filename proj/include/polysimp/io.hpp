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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "polysimp/simplify.hpp"

namespace polysimp {

enum class Format { GeoJson, Wkt, Auto };

/// Parses "geojson", "wkt" or "auto" (case-insensitive).
Format parse_format(std::string_view name);

struct FeatureRecord
{
  nlohmann::ordered_json id;          ///< null when the input carried none
  nlohmann::ordered_json properties;  ///< carried through untouched
  std::optional<Polygon> geometry;    ///< nullopt encodes a vanished/null geometry
};

struct ReadResult
{
  std::vector<FeatureRecord> records;
  std::size_t skipped = 0;  ///< non-areal geometries ignored
};

/// One record per polygon; multipolygon parts become records with ids
/// suffixed `#<part>`. Throws ParseError on malformed input.
ReadResult read_features(std::string_view source, Format format = Format::Auto);
ReadResult read_features(std::istream& in, Format format = Format::Auto);

ReadResult read_geojson(std::string_view source);
ReadResult read_wkt(std::string_view source);

struct WriteResult
{
  std::size_t skipped = 0;  ///< vanished records omitted from WKT output
};

/// GeoJSON: a FeatureCollection, one feature per line. WKT: one POLYGON per line.
/// Rings are closed and keep the orientation they were read with.
/// Throws IoError when the sink fails.
WriteResult write_features(const std::vector<FeatureRecord>& records, Format format,
                           std::ostream& out);

void write_geojson(const std::vector<FeatureRecord>& records, std::ostream& out);
WriteResult write_wkt(const std::vector<FeatureRecord>& records, std::ostream& out);

/// Shortest decimal that round-trips to the same double; -0 prints as 0.
std::string format_number(double value);

std::string polygon_to_wkt(const Polygon& polygon);

// SVG

struct SvgOptions
{
  double margin = 0.05;       ///< fraction of the larger bounding-box side
  double stroke_width = 1.0;  ///< screen pixels
  std::string title;
};

/// One side-by-side panel: `base` stroked gray, `overlay` stroked black.
/// Null overlay geometries hatch the matching base feature.
struct SvgPanel
{
  std::string title;
  const std::vector<FeatureRecord>* base = nullptr;
  const std::vector<FeatureRecord>* overlay = nullptr;
};

/// Throws GeometryError(NothingToRender) when there is no live ring to frame.
std::string render_svg(const std::vector<FeatureRecord>& before,
                       const std::vector<FeatureRecord>& after, const SvgOptions& options = {});
std::string render_svg_panels(const std::vector<SvgPanel>& panels, const SvgOptions& options = {});

// CSV

struct SweepRow
{
  double tau = 0.0;
  std::size_t segments = 0;
  std::size_t vertices = 0;
  double area = 0.0;
  double hausdorff = 0.0;
};

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);
std::vector<SweepRow> read_sweep_csv(std::string_view source);

}  // namespace polysimp
