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
#include <string>
#include <vector>

namespace lagmap {

enum class Mode { kOrientable, kSigned };

// Half of an edge. Edge i owns darts "i+" (id 2(i-1)) and "i-" (id 2(i-1)+1);
// the edge is directed from the vertex holding i+ to the vertex holding i-.
struct Dart {
  int id = 0;

  static Dart Plus(int edge) { return {2 * (edge - 1)}; }
  static Dart Minus(int edge) { return {2 * (edge - 1) + 1}; }

  int edge() const { return id / 2 + 1; }
  bool minus() const { return (id & 1) != 0; }
  Dart opposite() const { return {id ^ 1}; }
  std::string to_string() const;

  friend auto operator<=>(const Dart&, const Dart&) = default;
};

// Triangle of the barycentric subdivision. Flag 2d lies on the
// counterclockwise side of dart d at its vertex, flag 2d+1 on the clockwise
// side; there are 4n flags. Its three sides are the half-edge of d, half of
// the coedge of d's edge, and the diagonal joining the vertex to the face
// centre.
struct Flag {
  int id = 0;

  static Flag Of(Dart d, bool ccw_side) { return {2 * d.id + (ccw_side ? 0 : 1)}; }

  Dart dart() const { return {id / 2}; }
  bool ccw_side() const { return (id & 1) == 0; }
  int edge() const { return id / 4 + 1; }

  friend auto operator<=>(const Flag&, const Flag&) = default;
};

enum class Side { kHalfEdge = 0, kHalfCoedge = 1, kDiagonal = 2 };

std::string SideName(Side side);

// A map on a closed connected surface as a (signed) rotation system.
// Immutable after construction; the constructor validates every invariant
// and throws InvalidArgument otherwise.
class CombinatorialMap {
 public:
  // `rotation[v]` lists the darts around vertex v in counterclockwise order.
  // `edge_signs[i-1]` is +1 or -1 (all +1 when empty); -1 is only allowed in
  // signed mode. Vertex names default to v1, v2, ...
  CombinatorialMap(Mode mode, int num_edges,
                   std::vector<std::vector<Dart>> rotation,
                   std::vector<int> edge_signs = {},
                   std::vector<std::string> vertex_names = {});

  Mode mode() const { return mode_; }
  int num_edges() const { return num_edges_; }
  int num_darts() const { return 2 * num_edges_; }
  int num_flags() const { return 4 * num_edges_; }
  int num_vertices() const { return static_cast<int>(rotation_.size()); }
  int num_faces() const { return num_faces_; }
  int euler_characteristic() const {
    return num_vertices() - num_edges_ + num_faces_;
  }

  // Orientability of the underlying surface. Always true in orientable mode;
  // a signed map may still describe an orientable surface.
  bool orientable() const { return orientable_; }

  int edge_sign(int edge) const { return edge_signs_[edge - 1]; }
  const std::vector<int>& edge_signs() const { return edge_signs_; }
  bool is_loop(int edge) const {
    return vertex_of(Dart::Plus(edge)) == vertex_of(Dart::Minus(edge));
  }

  Dart next_around_vertex(Dart d) const { return {next_[d.id]}; }
  Dart prev_around_vertex(Dart d) const { return {prev_[d.id]}; }

  // Vertices are numbered by their smallest dart; each rotation cycle starts
  // at its smallest dart.
  const std::vector<std::vector<Dart>>& rotation() const { return rotation_; }
  const std::string& vertex_name(int vertex) const { return names_[vertex]; }
  int vertex_of(Dart d) const { return vertex_of_dart_[d.id]; }
  int vertex_of(Flag f) const { return vertex_of(f.dart()); }

  // Faces are numbered by their smallest flag.
  int face_of(Flag f) const { return face_of_flag_[f.id]; }

  // The neighbouring triangle across one side of `f`.
  Flag across(Flag f, Side side) const;

  // +1/-1 from a global orientation of the surface; only meaningful when
  // orientable(). In orientable mode flag 2d (counterclockwise side) is +1.
  int flag_orientation(Flag f) const { return flag_colour_[f.id]; }

 private:
  Mode mode_;
  int num_edges_;
  std::vector<std::vector<Dart>> rotation_;
  std::vector<std::string> names_;
  std::vector<int> edge_signs_;
  std::vector<int> next_;
  std::vector<int> prev_;
  std::vector<int> vertex_of_dart_;
  std::vector<int> face_of_flag_;
  std::vector<int> flag_colour_;
  int num_faces_ = 0;
  bool orientable_ = true;
};

}  // namespace lagmap
