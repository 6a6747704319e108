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

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lagmap/cut_set.hpp"
#include "lagmap/map.hpp"

namespace lagmap {

// J = {1..n} u {1*..n*} with the star involution i <-> i*.
class GroundSet {
 public:
  explicit GroundSet(int n);

  int n() const { return n_; }

  // Every admissible subset of size k (k = -1: every size), in increasing
  // mask order.
  std::vector<CutSet> AdmissibleSubsets(int k = -1) const;

 private:
  int n_;
};

// A non-empty family of admissible n-subsets, deduplicated and sorted.
class BasisFamily {
 public:
  BasisFamily(int n, std::vector<CutSet> bases);

  int n() const { return n_; }
  const std::vector<CutSet>& bases() const { return bases_; }
  std::size_t size() const { return bases_.size(); }
  bool contains(const CutSet& s) const;

  // {B* : B in the family}.
  BasisFamily starred() const;

  friend bool operator==(const BasisFamily&, const BasisFamily&) = default;

 private:
  int n_;
  std::vector<CutSet> bases_;
};

// One basis per line, elements sorted by index, lines sorted as strings.
std::string WriteBases(const BasisFamily& family);

// Membership test; inadmissible or wrongly sized sets are never bases.
bool IsBasis(const BasisFamily& family, const CutSet& s);

// Witness that the symmetric exchange axiom fails: no i in A^B makes
// A ^ {k, k*, i, i*} a basis.
struct ExchangeViolation {
  CutSet a;
  CutSet b;
  Element k;
};

// nullopt when the family satisfies the axiom; otherwise the first
// violation in canonical (A, B, k) order.
std::optional<ExchangeViolation> FindExchangeViolation(
    const BasisFamily& family);

inline bool SatisfiesSymmetricExchange(const BasisFamily& family) {
  return !FindExchangeViolation(family).has_value();
}

// Starred counts of all bases agree mod 2.
bool IsEven(const BasisFamily& family);

using IndependenceOracle = std::function<bool(const CutSet&)>;

// The independence oracle of a map: IsIndependent(map, .).
IndependenceOracle TopologicalOracle(const CombinatorialMap& map);

// A permutation of 1..n.
class Ordering {
 public:
  explicit Ordering(std::vector<int> order);

  int n() const { return static_cast<int>(order_.size()); }
  const std::vector<int>& items() const { return order_; }

 private:
  std::vector<int> order_;
};

// Takes i_j when B + i_j stays independent, else i_j*. Throws
// InvalidArgument when the oracle rejects both.
CutSet Greedy(const GroundSet& ground, const IndependenceOracle& independent,
              const Ordering& order);

// Every maximal independent admissible set, by exhaustive search over the
// 3^n admissible sets.
std::vector<CutSet> MaximalIndependentSets(const GroundSet& ground,
                                           const IndependenceOracle& independent);

// All admissible n-sets accepted by the oracle. Also confirms that every
// maximal independent set has n elements; a smaller one raises
// PropertyViolation.
BasisFamily EnumerateBases(const GroundSet& ground,
                           const IndependenceOracle& independent);

BasisFamily EnumerateBases(const CombinatorialMap& map);

}  // namespace lagmap
