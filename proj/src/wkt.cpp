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
#include <iterator>
#include <ostream>
#include <sstream>

#include "polysimp/io.hpp"

namespace polysimp {

namespace {

// Recursive-descent reader for POLYGON / MULTIPOLYGON text. Other geometry
// tags are parsed for balance and skipped.
class WktReader
{
public:
  explicit WktReader(std::string_view text) : text_(text) {}

  ReadResult read_all()
  {
    ReadResult out;
    skip_space();
    while (pos_ < text_.size()) {
      read_geometry(out);
      skip_space();
      if (peek() == ';') {
        ++pos_;
        skip_space();
      }
    }
    return out;
  }

private:
  [[noreturn]] void fail(const std::string& what) const
  {
    std::size_t line = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i)
      line += text_[i] == '\n';
    throw ParseError(what, line, pos_);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void expect(char c)
  {
    skip_space();
    if (peek() != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string word()
  {
    skip_space();
    std::string w;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      w += static_cast<char>(std::toupper(static_cast<unsigned char>(text_[pos_++])));
    return w;
  }

  double number()
  {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.' ||
          c == 'e' || c == 'E')
        ++pos_;
      else
        break;
    }
    if (start == pos_)
      fail("expected a number");
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    if (*first == '+')
      ++first;
    double value = 0.0;
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last) {
      pos_ = start;
      fail("malformed number");
    }
    return value;
  }

  // Optional Z / M / ZM dimension marker after the tag.
  int dimension_marker()
  {
    const std::size_t save = pos_;
    const std::string w = word();
    if (w == "Z" || w == "M")
      return 3;
    if (w == "ZM")
      return 4;
    pos_ = save;
    return 2;
  }

  bool empty_marker()
  {
    const std::size_t save = pos_;
    if (word() == "EMPTY")
      return true;
    pos_ = save;
    return false;
  }

  Point coordinate(int dims)
  {
    const double x = number();
    const double y = number();
    for (int i = 2; i < dims; ++i)
      number();
    // Tolerate an unannounced Z.
    skip_space();
    if (dims == 2 && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '-' ||
                      peek() == '+' || peek() == '.'))
      number();
    return {x, y};
  }

  Ring ring(int dims)
  {
    const std::size_t start = pos_;
    expect('(');
    std::vector<Point> points{coordinate(dims)};
    skip_space();
    while (peek() == ',') {
      ++pos_;
      points.push_back(coordinate(dims));
      skip_space();
    }
    expect(')');
    try {
      return Ring::from_points(points);
    } catch (const GeometryError& e) {
      pos_ = start;
      fail(e.what());
    }
  }

  Polygon polygon_body(int dims)
  {
    expect('(');
    Polygon polygon;
    polygon.exterior = ring(dims);
    skip_space();
    while (peek() == ',') {
      ++pos_;
      polygon.holes.push_back(ring(dims));
      skip_space();
    }
    expect(')');
    return polygon;
  }

  // Balanced-parenthesis skip for geometry kinds this reader does not keep.
  void skip_body(int dims)
  {
    expect('(');
    int depth = 1;
    while (depth > 0) {
      skip_space();
      const char c = peek();
      if (c == '(') {
        ++pos_;
        ++depth;
      } else if (c == ')') {
        ++pos_;
        --depth;
      } else if (c == ',') {
        ++pos_;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        const std::string w = word();
        static const char* tags[] = {"POINT", "LINESTRING", "POLYGON", "MULTIPOINT",
                                     "MULTILINESTRING", "MULTIPOLYGON", "EMPTY", "Z", "M", "ZM"};
        if (std::find(std::begin(tags), std::end(tags), w) == std::end(tags))
          fail("unexpected word '" + w + "'");
      } else if (c == '\0') {
        fail("unbalanced parentheses");
      } else {
        number();
      }
    }
    (void)dims;
  }

  void read_geometry(ReadResult& out)
  {
    const std::size_t start = pos_;
    const std::string tag = word();
    if (tag.empty())
      fail("expected a geometry tag");
    const int dims = dimension_marker();

    if (tag == "POLYGON") {
      if (empty_marker()) {
        ++out.skipped;
        return;
      }
      out.records.push_back({nullptr, nullptr, polygon_body(dims)});
    } else if (tag == "MULTIPOLYGON") {
      if (empty_marker()) {
        ++out.skipped;
        return;
      }
      const std::string base = std::to_string(index_++);
      expect('(');
      std::size_t part = 0;
      out.records.push_back({base + "#" + std::to_string(part++), nullptr, polygon_body(dims)});
      skip_space();
      while (peek() == ',') {
        ++pos_;
        out.records.push_back({base + "#" + std::to_string(part++), nullptr, polygon_body(dims)});
        skip_space();
      }
      expect(')');
      return;
    } else if (tag == "POINT" || tag == "LINESTRING" || tag == "MULTIPOINT" ||
               tag == "MULTILINESTRING" || tag == "GEOMETRYCOLLECTION" || tag == "TRIANGLE" ||
               tag == "TIN" || tag == "CIRCULARSTRING") {
      ++out.skipped;
      if (!empty_marker())
        skip_body(dims);
    } else {
      pos_ = start;
      fail("unknown geometry tag '" + tag + "'");
    }
    ++index_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t index_ = 0;
};

void append_ring(const Ring& ring, std::ostream& out)
{
  const auto points = ring.restored();
  out << '(';
  for (std::size_t i = 0; i <= points.size(); ++i) {
    const Point& p = points[i % points.size()];
    if (i)
      out << ", ";
    out << format_number(p.x()) << ' ' << format_number(p.y());
  }
  out << ')';
}

}  // namespace

ReadResult read_wkt(std::string_view source)
{
  return WktReader(source).read_all();
}

std::string polygon_to_wkt(const Polygon& polygon)
{
  std::ostringstream out;
  out << "POLYGON (";
  append_ring(polygon.exterior, out);
  for (const auto& hole : polygon.holes) {
    out << ", ";
    append_ring(hole, out);
  }
  out << ')';
  return out.str();
}

WriteResult write_wkt(const std::vector<FeatureRecord>& records, std::ostream& out)
{
  WriteResult result;
  for (const auto& r : records) {
    if (!r.geometry) {
      ++result.skipped;
      continue;
    }
    out << polygon_to_wkt(*r.geometry) << '\n';
  }
  if (!out)
    throw IoError("failed to write WKT output");
  return result;
}

}  // namespace polysimp
