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
#include <cctype>
#include <charconv>
#include <istream>
#include <iterator>
#include <ostream>

#include "polysimp/io.hpp"

namespace polysimp {

using Json = nlohmann::ordered_json;

namespace {

std::size_t line_of(std::string_view source, std::size_t offset)
{
  offset = std::min(offset, source.size());
  return 1 + static_cast<std::size_t>(
               std::count(source.begin(), source.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

[[noreturn]] void fail(const std::string& what)
{
  throw ParseError(what, 1, 0);
}

Point read_position(const Json& j, const std::string& where)
{
  if (!j.is_array() || j.size() < 2 || !j[0].is_number() || !j[1].is_number())
    fail(where + ": position must be an array of at least two numbers");
  return {j[0].get<double>(), j[1].get<double>()};
}

Ring read_ring(const Json& j, const std::string& where)
{
  if (!j.is_array())
    fail(where + ": linear ring must be an array");
  std::vector<Point> points;
  points.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    points.push_back(read_position(j[i], where + "/" + std::to_string(i)));
  try {
    return Ring::from_points(points);
  } catch (const GeometryError& e) {
    fail(where + ": " + e.what());
  }
}

std::optional<Polygon> read_polygon(const Json& coords, const std::string& where)
{
  if (!coords.is_array())
    fail(where + ": polygon coordinates must be an array");
  if (coords.empty())
    return std::nullopt;
  Polygon polygon;
  polygon.exterior = read_ring(coords[0], where + "/0");
  for (std::size_t i = 1; i < coords.size(); ++i)
    polygon.holes.push_back(read_ring(coords[i], where + "/" + std::to_string(i)));
  return polygon;
}

std::string id_text(const Json& id, std::size_t fallback)
{
  if (id.is_string())
    return id.get<std::string>();
  if (id.is_null())
    return std::to_string(fallback);
  return id.dump();
}

void read_geometry(const Json& geometry, const Json& id, const Json& properties,
                   std::size_t index, ReadResult& out, const std::string& where)
{
  if (geometry.is_null()) {
    out.records.push_back({id, properties, std::nullopt});
    return;
  }
  if (!geometry.is_object() || !geometry.contains("type") || !geometry["type"].is_string())
    fail(where + ": geometry must be an object with a string type");

  const auto type = geometry["type"].get<std::string>();
  if (type == "GeometryCollection") {
    if (!geometry.contains("geometries") || !geometry["geometries"].is_array())
      fail(where + ": GeometryCollection needs a geometries array");
    for (std::size_t i = 0; i < geometry["geometries"].size(); ++i)
      read_geometry(geometry["geometries"][i], id, properties, index, out,
                    where + "/geometries/" + std::to_string(i));
    return;
  }
  if (type != "Polygon" && type != "MultiPolygon") {
    static const char* known[] = {"Point", "MultiPoint", "LineString", "MultiLineString"};
    if (std::find(std::begin(known), std::end(known), type) == std::end(known))
      fail(where + ": unknown geometry type '" + type + "'");
    ++out.skipped;
    return;
  }
  if (!geometry.contains("coordinates"))
    fail(where + ": geometry has no coordinates");
  const Json& coords = geometry["coordinates"];

  if (type == "Polygon") {
    auto polygon = read_polygon(coords, where + "/coordinates");
    if (!polygon) {
      ++out.skipped;
      return;
    }
    out.records.push_back({id, properties, std::move(polygon)});
    return;
  }

  if (!coords.is_array())
    fail(where + ": MultiPolygon coordinates must be an array");
  const std::string base = id_text(id, index);
  for (std::size_t part = 0; part < coords.size(); ++part) {
    auto polygon = read_polygon(coords[part], where + "/coordinates/" + std::to_string(part));
    if (!polygon) {
      ++out.skipped;
      continue;
    }
    out.records.push_back({Json(base + "#" + std::to_string(part)), properties, std::move(polygon)});
  }
}

void read_feature(const Json& feature, std::size_t index, ReadResult& out, const std::string& where)
{
  if (!feature.is_object() || feature.value("type", Json()) != "Feature")
    fail(where + ": expected a Feature object");
  const Json id = feature.contains("id") ? feature["id"] : Json();
  if (!id.is_null() && !id.is_string() && !id.is_number())
    fail(where + ": feature id must be a string or number");
  const Json properties = feature.contains("properties") ? feature["properties"] : Json();
  if (!properties.is_null() && !properties.is_object())
    fail(where + ": properties must be an object or null");
  if (!feature.contains("geometry"))
    fail(where + ": feature has no geometry member");
  read_geometry(feature["geometry"], id, properties, index, out, where + "/geometry");
}

void write_ring(const Ring& ring, std::ostream& out)
{
  const auto points = ring.restored();
  out << '[';
  for (std::size_t i = 0; i <= points.size(); ++i) {
    const Point& p = points[i % points.size()];
    if (i)
      out << ',';
    out << '[' << format_number(p.x()) << ',' << format_number(p.y()) << ']';
  }
  out << ']';
}

}  // namespace

Format parse_format(std::string_view name)
{
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "geojson" || lower == "json")
    return Format::GeoJson;
  if (lower == "wkt")
    return Format::Wkt;
  if (lower == "auto")
    return Format::Auto;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string format_number(double value)
{
  if (value == 0.0)
    return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

ReadResult read_geojson(std::string_view source)
{
  Json doc;
  try {
    doc = Json::parse(source.begin(), source.end());
  } catch (const Json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError(e.what(), line_of(source, offset), offset);
  } catch (const Json::exception& e) {
    throw ParseError(e.what(), 1, 0);
  }

  ReadResult out;
  if (!doc.is_object() || !doc.contains("type") || !doc["type"].is_string())
    fail("top-level GeoJSON value must be an object with a string type");
  const auto type = doc["type"].get<std::string>();
  if (type == "FeatureCollection") {
    if (!doc.contains("features") || !doc["features"].is_array())
      fail("FeatureCollection needs a features array");
    const Json& features = doc["features"];
    for (std::size_t i = 0; i < features.size(); ++i)
      read_feature(features[i], i, out, "/features/" + std::to_string(i));
  } else if (type == "Feature") {
    read_feature(doc, 0, out, "");
  } else {
    read_geometry(doc, Json(), Json(), 0, out, "");
  }
  return out;
}

ReadResult read_features(std::string_view source, Format format)
{
  if (format == Format::Auto) {
    const auto pos = source.find_first_not_of(" \t\r\n");
    if (pos == std::string_view::npos)
      return {};
    if (source[pos] == '{')
      format = Format::GeoJson;
    else if (std::isalpha(static_cast<unsigned char>(source[pos])))
      format = Format::Wkt;
    else
      throw ParseError("cannot detect format from leading character", line_of(source, pos), pos);
  }
  if (format == Format::GeoJson) {
    if (source.find_first_not_of(" \t\r\n") == std::string_view::npos)
      return {};
    return read_geojson(source);
  }
  return read_wkt(source);
}

ReadResult read_features(std::istream& in, Format format)
{
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad())
    throw IoError("failed to read input stream");
  return read_features(text, format);
}

void write_geojson(const std::vector<FeatureRecord>& records, std::ostream& out)
{
  out << "{\"type\":\"FeatureCollection\",\"features\":[";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    out << (i ? ",\n" : "\n") << "{\"type\":\"Feature\"";
    if (!r.id.is_null())
      out << ",\"id\":" << r.id.dump();
    out << ",\"properties\":" << r.properties.dump() << ",\"geometry\":";
    if (!r.geometry) {
      out << "null}";
      continue;
    }
    out << "{\"type\":\"Polygon\",\"coordinates\":[";
    write_ring(r.geometry->exterior, out);
    for (const auto& hole : r.geometry->holes) {
      out << ',';
      write_ring(hole, out);
    }
    out << "]}}";
  }
  out << "\n]}\n";
  if (!out)
    throw IoError("failed to write GeoJSON output");
}

WriteResult write_features(const std::vector<FeatureRecord>& records, Format format,
                           std::ostream& out)
{
  if (format == Format::Wkt)
    return write_wkt(records, out);
  write_geojson(records, out);
  return {};
}

}  // namespace polysimp
