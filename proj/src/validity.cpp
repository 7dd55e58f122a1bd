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

#include "polysimp/validity.hpp"

namespace polysimp {

std::vector<std::pair<std::size_t, std::size_t>> self_intersections(const Ring& ring)
{
  std::vector<std::pair<std::size_t, std::size_t>> hits;
  const std::size_t n = ring.size();
  if (n < 4)
    return hits;
  const auto index = [](std::size_t i) { return static_cast<std::ptrdiff_t>(i); };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1)
        continue;  // adjacent through the closing vertex
      if (segments_intersect(ring.segment(index(i)), ring.segment(index(j))))
        hits.emplace_back(i, j);
    }
  }
  return hits;
}

}  // namespace polysimp
