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

#include <iosfwd>
#include <optional>
#include <string>

#include "polysimp/geometry.hpp"

namespace polysimp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitUsage = 64;

struct CliConfig
{
  std::string subcommand;
  std::string input = "-";
  std::string output = "-";
  std::string input_format = "auto";
  std::string output_format;  ///< empty: per-command default

  std::optional<double> tau;
  double epsilon = kPi<double> / 36.0;
  double delta = kPi<double> / 180.0;
  std::string gamma = "dynamic";
  std::optional<double> rdp_tolerance;

  double sweep_from = 0.0;
  double sweep_to = 0.0;
  double sweep_step = 0.0;

  std::string report;  ///< JSON report path
  std::string svg;     ///< SVG path (sweep: file prefix)
  bool check_validity = false;
  bool legacy_translate_sign = false;
};

/// Standard streams used by the commands; tests substitute string streams.
struct Streams
{
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

int cmd_simplify(const CliConfig& config, Streams io);
int cmd_sweep(const CliConfig& config, Streams io);
int cmd_compare(const CliConfig& config, Streams io);
int cmd_render(const CliConfig& config, Streams io);

/// Parses argv and dispatches. Usage errors return 64.
int run(int argc, const char* const* argv, Streams io);

/// Worker cap from SIMPLIFY_THREADS (0 = sequential). Unset: hardware concurrency.
unsigned worker_count();

}  // namespace polysimp::cli
