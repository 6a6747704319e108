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

#include "lagmap/map.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lagmap/error.hpp"

namespace lagmap {

std::string Dart::to_string() const {
  return std::to_string(edge()) + (minus() ? "-" : "+");
}

std::string SideName(Side side) {
  switch (side) {
    case Side::kHalfEdge:
      return "half-edge";
    case Side::kHalfCoedge:
      return "half-coedge";
    case Side::kDiagonal:
      return "diagonal";
  }
  return "?";
}

CombinatorialMap::CombinatorialMap(Mode mode, int num_edges,
                                   std::vector<std::vector<Dart>> rotation,
                                   std::vector<int> edge_signs,
                                   std::vector<std::string> vertex_names)
    : mode_(mode), num_edges_(num_edges) {
  if (num_edges < 1) {
    throw InvalidArgument("a map needs at least one edge");
  }
  if (edge_signs.empty()) edge_signs.assign(num_edges, 1);
  if (static_cast<int>(edge_signs.size()) != num_edges) {
    throw InvalidArgument("expected one sign per edge");
  }
  for (int s : edge_signs) {
    if (s != 1 && s != -1) throw InvalidArgument("edge sign must be +1 or -1");
    if (s == -1 && mode == Mode::kOrientable) {
      throw InvalidArgument("negative edge sign in orientable mode");
    }
  }
  edge_signs_ = std::move(edge_signs);

  if (vertex_names.empty()) {
    for (std::size_t v = 0; v < rotation.size(); ++v) {
      vertex_names.push_back("v" + std::to_string(v + 1));
    }
  }
  if (vertex_names.size() != rotation.size()) {
    throw InvalidArgument("expected one name per vertex");
  }
  if (std::set<std::string>(vertex_names.begin(), vertex_names.end()).size() !=
      vertex_names.size()) {
    throw InvalidArgument("duplicate vertex name");
  }

  const int darts = 2 * num_edges;
  std::vector<bool> seen(darts, false);
  for (const auto& cycle : rotation) {
    if (cycle.empty()) throw InvalidArgument("vertex with no darts");
    for (Dart d : cycle) {
      if (d.id < 0 || d.id >= darts) {
        throw InvalidArgument("dart " + d.to_string() + " out of range");
      }
      if (seen[d.id]) {
        throw InvalidArgument("duplicate dart " + d.to_string());
      }
      seen[d.id] = true;
    }
  }
  for (int d = 0; d < darts; ++d) {
    if (!seen[d]) throw InvalidArgument("missing dart " + Dart{d}.to_string());
  }

  // Canonical vertex order: by smallest dart, each cycle starting there.
  std::vector<std::size_t> order(rotation.size());
  for (auto& cycle : rotation) {
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()),
                cycle.end());
  }
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return rotation[a].front() < rotation[b].front();
  });
  for (std::size_t v : order) {
    rotation_.push_back(std::move(rotation[v]));
    names_.push_back(std::move(vertex_names[v]));
  }

  next_.assign(darts, 0);
  prev_.assign(darts, 0);
  vertex_of_dart_.assign(darts, 0);
  for (std::size_t v = 0; v < rotation_.size(); ++v) {
    const auto& cycle = rotation_[v];
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      Dart d = cycle[k];
      Dart n = cycle[(k + 1) % cycle.size()];
      next_[d.id] = n.id;
      prev_[n.id] = d.id;
      vertex_of_dart_[d.id] = static_cast<int>(v);
    }
  }

  const int flags = num_flags();
  face_of_flag_.assign(flags, -1);
  for (int start = 0; start < flags; ++start) {
    if (face_of_flag_[start] >= 0) continue;
    std::vector<int> stack{start};
    face_of_flag_[start] = num_faces_;
    while (!stack.empty()) {
      Flag f{stack.back()};
      stack.pop_back();
      for (Side s : {Side::kDiagonal, Side::kHalfCoedge}) {
        Flag g = across(f, s);
        if (face_of_flag_[g.id] < 0) {
          face_of_flag_[g.id] = num_faces_;
          stack.push_back(g.id);
        }
      }
    }
    ++num_faces_;
  }

  flag_colour_.assign(flags, 0);
  flag_colour_[0] = 1;
  std::vector<int> stack{0};
  int reached = 1;
  while (!stack.empty()) {
    Flag f{stack.back()};
    stack.pop_back();
    for (Side s : {Side::kHalfEdge, Side::kHalfCoedge, Side::kDiagonal}) {
      Flag g = across(f, s);
      if (flag_colour_[g.id] == 0) {
        flag_colour_[g.id] = -flag_colour_[f.id];
        stack.push_back(g.id);
        ++reached;
      } else if (flag_colour_[g.id] == flag_colour_[f.id]) {
        orientable_ = false;
      }
    }
  }
  if (reached != flags) throw InvalidArgument("map is not connected");
}

Flag CombinatorialMap::across(Flag f, Side side) const {
  const Dart d = f.dart();
  switch (side) {
    case Side::kHalfEdge:
      return {f.id ^ 1};
    case Side::kDiagonal:
      return f.ccw_side() ? Flag::Of(next_around_vertex(d), false)
                          : Flag::Of(prev_around_vertex(d), true);
    case Side::kHalfCoedge: {
      const bool twisted = edge_sign(d.edge()) < 0;
      return Flag::Of(d.opposite(), twisted ? f.ccw_side() : !f.ccw_side());
    }
  }
  return f;
}

}  // namespace lagmap
