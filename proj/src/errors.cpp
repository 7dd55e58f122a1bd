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

#include "polysimp/errors.hpp"

namespace polysimp {

std::string_view to_string(ErrorCode code)
{
  switch (code) {
    case ErrorCode::DegenerateRing: return "DegenerateRing";
    case ErrorCode::InvalidCoordinate: return "InvalidCoordinate";
    case ErrorCode::SpikeAngle: return "SpikeAngle";
    case ErrorCode::DegenerateSegment: return "DegenerateSegment";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NothingToRender: return "NothingToRender";
  }
  return "Unknown";
}

GeometryError::GeometryError(ErrorCode code, const std::string& what)
  : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
{
}

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t offset)
  : std::runtime_error("line " + std::to_string(line) + ", offset " + std::to_string(offset) +
                       ": " + what),
    line_(line), offset_(offset)
{
}

}  // namespace polysimp
