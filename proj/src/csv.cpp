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

#include <charconv>
#include <ostream>
#include <sstream>
#include <string>

#include "polysimp/io.hpp"

namespace polysimp {

namespace {

constexpr std::string_view kSweepHeader = "tau,segments,vertices,area,hausdorff";

template <typename T>
T parse_field(std::string_view field, std::size_t line)
{
  T value{};
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size())
    throw ParseError("bad CSV field '" + std::string(field) + "'", line, 0);
  return value;
}

}  // namespace

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out)
{
  out << kSweepHeader << '\n';
  for (const auto& row : rows) {
    out << format_number(row.tau) << ',' << row.segments << ',' << row.vertices << ','
        << format_number(row.area) << ',' << format_number(row.hausdorff) << '\n';
  }
  if (!out)
    throw IoError("failed to write sweep CSV");
}

std::vector<SweepRow> read_sweep_csv(std::string_view source)
{
  std::vector<SweepRow> rows;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < source.size()) {
    std::size_t end = source.find('\n', start);
    if (end == std::string_view::npos)
      end = source.size();
    std::string_view line = source.substr(start, end - start);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    start = end + 1;
    ++line_no;
    if (line_no == 1) {
      if (line != kSweepHeader)
        throw ParseError("unexpected sweep CSV header", 1, 0);
      continue;
    }
    if (line.empty())
      continue;

    std::vector<std::string_view> fields;
    std::size_t f = 0;
    while (true) {
      const std::size_t comma = line.find(',', f);
      fields.push_back(line.substr(f, comma == std::string_view::npos ? line.npos : comma - f));
      if (comma == std::string_view::npos)
        break;
      f = comma + 1;
    }
    if (fields.size() != 5)
      throw ParseError("sweep CSV row needs 5 fields", line_no, 0);
    rows.push_back({parse_field<double>(fields[0], line_no),
                    parse_field<std::size_t>(fields[1], line_no),
                    parse_field<std::size_t>(fields[2], line_no),
                    parse_field<double>(fields[3], line_no),
                    parse_field<double>(fields[4], line_no)});
  }
  if (line_no == 0)
    throw ParseError("empty sweep CSV", 1, 0);
  return rows;
}

}  // namespace polysimp
