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

// Glue between the production engine and the literal step interpreter.

#pragma once

#include <polysimp/simplify.hpp>

#include <optional>
#include <vector>

#include "support/step_interpreter.hpp"

namespace harness {

using polysimp::Point;

inline oracle::Params to_oracle(const polysimp::SimplifyParams& p)
{
  oracle::Params o{p.tau, p.epsilon, p.delta, p.gamma.dynamic, p.gamma.value};
  return o;
}

/// Final ring from the step interpreter (counter-clockwise), or nullopt if it vanished.
inline std::optional<std::vector<Point>> interpret(const polysimp::Ring& ring,
                                                   const polysimp::SimplifyParams& params)
{
  std::vector<oracle::P> in;
  for (const auto& p : ring.vertices())
    in.push_back({p.x(), p.y()});
  const auto res = oracle::run(in, to_oracle(params));
  if (res.vanished)
    return std::nullopt;
  std::vector<Point> out;
  for (const auto& p : res.ring)
    out.emplace_back(p.x, p.y);
  return out;
}

/// Final counter-clockwise ring from the engine, or nullopt if it vanished.
inline std::optional<std::vector<Point>> engine(const polysimp::Ring& ring,
                                                const polysimp::SimplifyParams& params)
{
  polysimp::SimplifyEngine e(ring, params);
  e.run();
  if (e.vanished())
    return std::nullopt;
  return e.vertices();
}

inline bool agree(const std::optional<std::vector<Point>>& a,
                  const std::optional<std::vector<Point>>& b, double tol = 1e-9)
{
  if (a.has_value() != b.has_value())
    return false;
  return !a || polysimp::same_cycle(*a, *b, tol);
}

}  // namespace harness
