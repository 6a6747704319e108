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

#include <string>
#include <vector>

#include "lagmap/map.hpp"

namespace lagmap::testing {

inline const std::vector<std::string> kFixtureNames = {
    "SPHERE_EDGE", "SPHERE_LOOP", "TORUS_AB", "THETA", "RP2_LOOP"};

CombinatorialMap Fixture(const std::string& name);
std::string FixturePath(const std::string& name);
std::string GoldenPath(const std::string& name);

struct NamedMap {
  std::string name;
  CombinatorialMap map;
};

// The five fixtures followed by every orientable map with at most
// `max_edges` edges (one per isomorphism class), named "enum#k".
const std::vector<NamedMap>& Corpus(int max_edges = 4);

// Every signed rotation system obtained from the enumerated orientable maps
// with at most `max_edges` edges by all 2^n sign patterns.
std::vector<CombinatorialMap> SignedVariants(int max_edges);

}  // namespace lagmap::testing
