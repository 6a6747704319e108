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

#include "lagmap/cut_set.hpp"

#include <bit>
#include <cctype>
#include <charconv>

#include "lagmap/error.hpp"

namespace lagmap {
namespace {

std::uint64_t Bit(int index) {
  if (index < 1 || index > CutSet::kMaxEdges) {
    throw InvalidArgument("element index " + std::to_string(index) +
                          " out of range 1.." +
                          std::to_string(CutSet::kMaxEdges));
  }
  return std::uint64_t{1} << (index - 1);
}

}  // namespace

std::string Element::to_string() const {
  return std::to_string(index) + (starred ? "*" : "");
}

Element ParseElement(std::string_view token) {
  Element e;
  if (!token.empty() && token.back() == '*') {
    e.starred = true;
    token.remove_suffix(1);
  }
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(),
                                   value);
  if (token.empty() || ec != std::errc() ||
      ptr != token.data() + token.size() || value < 1) {
    throw InvalidArgument("bad ground-set element '" + std::string(token) +
                          "'");
  }
  e.index = value;
  return e;
}

CutSet::CutSet(std::initializer_list<Element> elements) {
  for (Element e : elements) insert(e);
}

CutSet::CutSet(const std::vector<Element>& elements) {
  for (Element e : elements) insert(e);
}

void CutSet::insert(Element e) {
  (e.starred ? coedges_ : edges_) |= Bit(e.index);
}

void CutSet::erase(Element e) {
  (e.starred ? coedges_ : edges_) &= ~Bit(e.index);
}

bool CutSet::contains(Element e) const {
  return ((e.starred ? coedges_ : edges_) & Bit(e.index)) != 0;
}

int CutSet::size() const {
  return std::popcount(edges_) + std::popcount(coedges_);
}

int CutSet::max_index() const {
  std::uint64_t all = edges_ | coedges_;
  return all == 0 ? 0 : 64 - std::countl_zero(all);
}

int CutSet::starred_count() const { return std::popcount(coedges_); }

std::vector<Element> CutSet::elements() const {
  std::vector<Element> out;
  for (int i = 1; i <= max_index(); ++i) {
    if (edges_ & Bit(i)) out.push_back({i, false});
    if (coedges_ & Bit(i)) out.push_back({i, true});
  }
  return out;
}

std::string CutSet::to_string() const {
  std::string out;
  for (const Element& e : elements()) {
    if (!out.empty()) out += ' ';
    out += e.to_string();
  }
  return out;
}

CutSet ParseCutSet(std::string_view text) {
  CutSet s;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) ||
            text[pos] == ',' || text[pos] == '{' || text[pos] == '}')) {
      ++pos;
    }
    std::size_t end = pos;
    while (end < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[end])) &&
           text[end] != ',' && text[end] != '{' && text[end] != '}') {
      ++end;
    }
    if (end > pos) s.insert(ParseElement(text.substr(pos, end - pos)));
    pos = end;
  }
  return s;
}

}  // namespace lagmap
