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

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace lagmap {

// An element of the ground set {1..n} u {1*..n*}: edge `index` when
// unstarred, its coedge when starred.
struct Element {
  int index = 1;
  bool starred = false;

  Element star() const { return {index, !starred}; }
  std::string to_string() const;

  friend auto operator<=>(const Element&, const Element&) = default;
};

// Parses "3" or "3*".
Element ParseElement(std::string_view token);

// A finite subset of the ground set, stored as two bit masks. Supports up to
// kMaxEdges edges, far above what exhaustive enumeration can handle.
class CutSet {
 public:
  static constexpr int kMaxEdges = 64;

  CutSet() = default;
  CutSet(std::initializer_list<Element> elements);
  explicit CutSet(const std::vector<Element>& elements);

  static CutSet FromMasks(std::uint64_t edges, std::uint64_t coedges) {
    CutSet s;
    s.edges_ = edges;
    s.coedges_ = coedges;
    return s;
  }

  void insert(Element e);
  void erase(Element e);
  bool contains(Element e) const;

  int size() const;
  bool empty() const { return edges_ == 0 && coedges_ == 0; }

  // At most one of {i, i*} for every i.
  bool admissible() const { return (edges_ & coedges_) == 0; }

  // Largest index present, 0 for the empty set.
  int max_index() const;

  // Swaps i <-> i* for every member.
  CutSet starred() const { return FromMasks(coedges_, edges_); }

  int starred_count() const;

  CutSet symmetric_difference(const CutSet& other) const {
    return FromMasks(edges_ ^ other.edges_, coedges_ ^ other.coedges_);
  }
  CutSet united(const CutSet& other) const {
    return FromMasks(edges_ | other.edges_, coedges_ | other.coedges_);
  }
  bool subset_of(const CutSet& other) const {
    return (edges_ & ~other.edges_) == 0 && (coedges_ & ~other.coedges_) == 0;
  }

  std::uint64_t edge_mask() const { return edges_; }
  std::uint64_t coedge_mask() const { return coedges_; }

  // Members sorted by index, unstarred before starred.
  std::vector<Element> elements() const;

  // Space separated, e.g. "1 2* 3*". Empty string for the empty set.
  std::string to_string() const;

  friend auto operator<=>(const CutSet&, const CutSet&) = default;

 private:
  std::uint64_t edges_ = 0;
  std::uint64_t coedges_ = 0;
};

// Parses a whitespace- or comma-separated element list.
CutSet ParseCutSet(std::string_view text);

}  // namespace lagmap
