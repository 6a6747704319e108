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

#include "lagmap/delta_matroid.hpp"

#include <algorithm>
#include <set>

#include "lagmap/error.hpp"
#include "lagmap/topology.hpp"

namespace lagmap {
namespace {

// Admissible sets in bijection with ternary codes: digit 0 absent, 1 the
// edge, 2 the coedge.
CutSet FromTernary(int n, long code) {
  std::uint64_t edges = 0, coedges = 0;
  for (int i = 0; i < n; ++i, code /= 3) {
    if (code % 3 == 1) edges |= std::uint64_t{1} << i;
    if (code % 3 == 2) coedges |= std::uint64_t{1} << i;
  }
  return CutSet::FromMasks(edges, coedges);
}

long Power3(int n) {
  long p = 1;
  for (int i = 0; i < n; ++i) p *= 3;
  return p;
}

}  // namespace

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 1 || n > CutSet::kMaxEdges) {
    throw InvalidArgument("ground set size " + std::to_string(n) +
                          " out of range");
  }
}

std::vector<CutSet> GroundSet::AdmissibleSubsets(int k) const {
  std::vector<CutSet> out;
  if (k == n_) {
    // 2^n choices of stars; cheaper than walking all 3^n codes.
    for (std::uint64_t stars = 0; stars < (std::uint64_t{1} << n_); ++stars) {
      const std::uint64_t all = (n_ == 64) ? ~std::uint64_t{0}
                                           : (std::uint64_t{1} << n_) - 1;
      out.push_back(CutSet::FromMasks(all & ~stars, stars));
    }
  } else {
    const long total = Power3(n_);
    for (long code = 0; code < total; ++code) {
      CutSet s = FromTernary(n_, code);
      if (k < 0 || s.size() == k) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BasisFamily::BasisFamily(int n, std::vector<CutSet> bases)
    : n_(n), bases_(std::move(bases)) {
  if (bases_.empty()) throw InvalidArgument("a basis family cannot be empty");
  for (const CutSet& b : bases_) {
    if (!b.admissible() || b.size() != n || b.max_index() > n) {
      throw InvalidArgument("{" + b.to_string() +
                            "} is not an admissible " + std::to_string(n) +
                            "-set");
    }
  }
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
}

bool BasisFamily::contains(const CutSet& s) const {
  return std::binary_search(bases_.begin(), bases_.end(), s);
}

BasisFamily BasisFamily::starred() const {
  std::vector<CutSet> out;
  for (const CutSet& b : bases_) out.push_back(b.starred());
  return BasisFamily(n_, std::move(out));
}

std::string WriteBases(const BasisFamily& family) {
  std::vector<std::string> lines;
  for (const CutSet& b : family.bases()) lines.push_back(b.to_string());
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& line : lines) out += line + "\n";
  return out;
}

bool IsBasis(const BasisFamily& family, const CutSet& s) {
  if (!s.admissible() || s.size() != family.n()) return false;
  return family.contains(s);
}

std::optional<ExchangeViolation> FindExchangeViolation(
    const BasisFamily& family) {
  for (const CutSet& a : family.bases()) {
    for (const CutSet& b : family.bases()) {
      const CutSet diff = a.symmetric_difference(b);
      for (Element k : diff.elements()) {
        bool found = false;
        for (Element i : diff.elements()) {
          CutSet swap{k, k.star(), i, i.star()};
          if (family.contains(a.symmetric_difference(swap))) {
            found = true;
            break;
          }
        }
        if (!found) return ExchangeViolation{a, b, k};
      }
    }
  }
  return std::nullopt;
}

bool IsEven(const BasisFamily& family) {
  const int parity = family.bases().front().starred_count() % 2;
  return std::all_of(
      family.bases().begin(), family.bases().end(),
      [parity](const CutSet& b) { return b.starred_count() % 2 == parity; });
}

IndependenceOracle TopologicalOracle(const CombinatorialMap& map) {
  return [&map](const CutSet& s) { return IsIndependent(map, s); };
}

Ordering::Ordering(std::vector<int> order) : order_(std::move(order)) {
  std::vector<int> sorted = order_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] != static_cast<int>(k) + 1) {
      throw InvalidArgument("ordering is not a permutation of 1.." +
                            std::to_string(sorted.size()));
    }
  }
}

CutSet Greedy(const GroundSet& ground, const IndependenceOracle& independent,
              const Ordering& order) {
  if (order.n() != ground.n()) {
    throw InvalidArgument("ordering has " + std::to_string(order.n()) +
                          " items, expected " + std::to_string(ground.n()));
  }
  CutSet b;
  for (int i : order.items()) {
    CutSet with_edge = b;
    with_edge.insert({i, false});
    if (independent(with_edge)) {
      b = with_edge;
      continue;
    }
    CutSet with_coedge = b;
    with_coedge.insert({i, true});
    if (!independent(with_coedge)) {
      throw InvalidArgument(
          "oracle is not a Lagrangian independence oracle: it rejects both " +
          std::to_string(i) + " and " + std::to_string(i) + "* after {" +
          b.to_string() + "}");
    }
    b = with_coedge;
  }
  return b;
}

std::vector<CutSet> MaximalIndependentSets(
    const GroundSet& ground, const IndependenceOracle& independent) {
  const int n = ground.n();
  const long total = Power3(n);
  std::vector<char> indep(total);
  for (long code = 0; code < total; ++code) {
    indep[code] = independent(FromTernary(n, code)) ? 1 : 0;
  }
  std::vector<CutSet> out;
  for (long code = 0; code < total; ++code) {
    if (!indep[code]) continue;
    bool maximal = true;
    long place = 1;
    for (int i = 0; i < n && maximal; ++i, place *= 3) {
      if ((code / place) % 3 != 0) continue;
      if (indep[code + place] || indep[code + 2 * place]) maximal = false;
    }
    if (maximal) out.push_back(FromTernary(n, code));
  }
  std::sort(out.begin(), out.end());
  return out;
}

BasisFamily EnumerateBases(const GroundSet& ground,
                           const IndependenceOracle& independent) {
  std::vector<CutSet> maximal = MaximalIndependentSets(ground, independent);
  for (const CutSet& s : maximal) {
    if (s.size() != ground.n()) {
      throw PropertyViolation("maximal independent set {" + s.to_string() +
                              "} has " + std::to_string(s.size()) +
                              " elements, expected " +
                              std::to_string(ground.n()));
    }
  }
  if (maximal.empty()) throw PropertyViolation("no independent set found");
  return BasisFamily(ground.n(), std::move(maximal));
}

BasisFamily EnumerateBases(const CombinatorialMap& map) {
  return EnumerateBases(GroundSet(map.num_edges()), TopologicalOracle(map));
}

}  // namespace lagmap
