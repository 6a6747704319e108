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

#include "corpus.hpp"

#include <map>

#include "lagmap/enumerate.hpp"
#include "lagmap/map_io.hpp"

namespace lagmap::testing {

std::string FixturePath(const std::string& name) {
  return std::string(LAGMAP_FIXTURE_DIR) + "/" + name + ".map";
}

std::string GoldenPath(const std::string& name) {
  return std::string(LAGMAP_GOLDEN_DIR) + "/" + name;
}

CombinatorialMap Fixture(const std::string& name) {
  return LoadMap(FixturePath(name));
}

const std::vector<NamedMap>& Corpus(int max_edges) {
  static std::map<int, std::vector<NamedMap>> cache;
  auto it = cache.find(max_edges);
  if (it != cache.end()) return it->second;
  std::vector<NamedMap> corpus;
  for (const auto& name : kFixtureNames) corpus.push_back({name, Fixture(name)});
  int k = 0;
  for (auto& m : EnumerateOrientableMaps(max_edges)) {
    corpus.push_back({"enum#" + std::to_string(k++), std::move(m)});
  }
  return cache.emplace(max_edges, std::move(corpus)).first->second;
}

std::vector<CombinatorialMap> SignedVariants(int max_edges) {
  std::vector<CombinatorialMap> out;
  for (const auto& m : EnumerateOrientableMaps(max_edges)) {
    const int n = m.num_edges();
    for (int pattern = 0; pattern < (1 << n); ++pattern) {
      std::vector<int> signs(n);
      for (int i = 0; i < n; ++i) signs[i] = (pattern >> i) & 1 ? -1 : 1;
      out.emplace_back(Mode::kSigned, n, m.rotation(), signs);
    }
  }
  return out;
}

}  // namespace lagmap::testing
