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
#include <utility>
#include <vector>

#include "polysimp/ring.hpp"

namespace polysimp {

/// Pairs (i, j), i < j, of non-adjacent segments s_i and s_j that touch or cross.
/// Reports only; nothing is repaired.
std::vector<std::pair<std::size_t, std::size_t>> self_intersections(const Ring& ring);

inline bool is_simple(const Ring& ring) { return self_intersections(ring).empty(); }

}  // namespace polysimp
