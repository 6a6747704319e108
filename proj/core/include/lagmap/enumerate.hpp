// Copyright 2026 The Authors.
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

#include <vector>

#include "lagmap/map.hpp"

namespace lagmap {

// Canonical code of an orientable-mode map under orientation-preserving
// isomorphism: the lexicographically least relabelling of (rotation,
// edge involution) over all root darts.
std::vector<int> CanonicalCode(const CombinatorialMap& map);

// Every connected orientable-mode map with 1..max_edges edges, one per
// orientation-preserving isomorphism class, in order of edge count and then
// canonical code. Exhaustive over all (2n)! rotations; practical up to 5.
std::vector<CombinatorialMap> EnumerateOrientableMaps(int max_edges);

}  // namespace lagmap
