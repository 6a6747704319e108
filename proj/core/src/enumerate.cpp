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

#include "lagmap/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lagmap/error.hpp"

namespace lagmap {
namespace {

// Relabels darts in breadth-first order from `root`, following next, then
// the opposite dart. The code lists (next, opposite) labels per label.
std::vector<int> CodeFrom(const std::vector<int>& next, int root) {
  const int darts = static_cast<int>(next.size());
  std::vector<int> label(darts, -1);
  std::vector<int> order{root};
  label[root] = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (int d : {next[order[k]], order[k] ^ 1}) {
      if (label[d] < 0) {
        label[d] = static_cast<int>(order.size());
        order.push_back(d);
      }
    }
  }
  if (static_cast<int>(order.size()) != darts) return {};
  std::vector<int> code;
  code.reserve(2 * darts);
  for (int d : order) {
    code.push_back(label[next[d]]);
    code.push_back(label[d ^ 1]);
  }
  return code;
}

std::vector<int> MinimalCode(const std::vector<int>& next) {
  std::vector<int> best;
  for (int root = 0; root < static_cast<int>(next.size()); ++root) {
    std::vector<int> code = CodeFrom(next, root);
    if (code.empty()) return {};
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

CombinatorialMap FromPermutation(int n, const std::vector<int>& next) {
  std::vector<std::vector<Dart>> rotation;
  std::vector<bool> done(next.size(), false);
  for (int d = 0; d < static_cast<int>(next.size()); ++d) {
    if (done[d]) continue;
    std::vector<Dart> cycle;
    for (int x = d; !done[x]; x = next[x]) {
      done[x] = true;
      cycle.push_back(Dart{x});
    }
    rotation.push_back(std::move(cycle));
  }
  return CombinatorialMap(Mode::kOrientable, n, std::move(rotation));
}

}  // namespace

std::vector<int> CanonicalCode(const CombinatorialMap& map) {
  if (map.mode() != Mode::kOrientable) {
    throw InvalidArgument("canonical codes are defined for orientable mode");
  }
  std::vector<int> next(map.num_darts());
  for (int d = 0; d < map.num_darts(); ++d) {
    next[d] = map.next_around_vertex(Dart{d}).id;
  }
  return MinimalCode(next);
}

std::vector<CombinatorialMap> EnumerateOrientableMaps(int max_edges) {
  std::vector<CombinatorialMap> out;
  for (int n = 1; n <= max_edges; ++n) {
    std::map<std::vector<int>, std::vector<int>> classes;
    std::vector<int> next(2 * n);
    std::iota(next.begin(), next.end(), 0);
    do {
      std::vector<int> code = MinimalCode(next);
      if (!code.empty()) classes.emplace(std::move(code), next);
    } while (std::next_permutation(next.begin(), next.end()));
    for (const auto& [code, perm] : classes) {
      out.push_back(FromPermutation(n, perm));
    }
  }
  return out;
}

}  // namespace lagmap
