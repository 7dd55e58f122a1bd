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
#include <stdexcept>
#include <string>
#include <string_view>

namespace polysimp {

enum class ErrorCode {
  DegenerateRing,
  InvalidCoordinate,
  SpikeAngle,
  DegenerateSegment,
  ParameterOutOfRange,
  TooFewPoints,
  InvalidParams,
  NothingToRender,
};

std::string_view to_string(ErrorCode code);

class GeometryError : public std::runtime_error
{
public:
  GeometryError(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Malformed GeoJSON or WKT. `line` is 1-based, `offset` is the 0-based byte offset.
class ParseError : public std::runtime_error
{
public:
  ParseError(const std::string& what, std::size_t line, std::size_t offset);

  std::size_t line() const noexcept { return line_; }
  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t line_;
  std::size_t offset_;
};

class IoError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

}  // namespace polysimp
