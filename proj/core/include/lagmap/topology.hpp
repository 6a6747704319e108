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

#include <array>
#include <vector>

#include "lagmap/cut_set.hpp"
#include "lagmap/map.hpp"

namespace lagmap {

struct MapInfo {
  int num_vertices = 0;
  int num_edges = 0;
  int num_faces = 0;
  int euler_characteristic = 0;
  // Handles when orientable (chi = 2 - 2g), crosscaps otherwise (chi = 2 - k).
  int genus = 0;
  bool orientable = true;
};

MapInfo GetMapInfo(const CombinatorialMap& map);

// Vertex v of the dual is face v of `map`; coedge i* becomes dual edge i.
// The dual edge runs from the face on the right of edge i to the face on its
// left, so that edge i meets it with intersection index +1.
CombinatorialMap DualMap(const CombinatorialMap& map);

// Isomorphism of the underlying flag structures (barycentric triangles and
// their typed adjacencies). Reflections count as isomorphisms.
bool Isomorphic(const CombinatorialMap& a, const CombinatorialMap& b);

struct FlagArc {
  Flag from;  // from.id < to.id
  Flag to;
  Side side;
  int edge;  // edge owning the side; 0 for diagonals
};

struct FlagGraph {
  int num_flags = 0;
  std::vector<FlagArc> arcs;
  // arcs[arc_of[f][side]] is the arc crossing `side` of flag f.
  std::vector<std::array<int, 3>> arc_of;
};

// 4n nodes, 6n arcs: two half-edge, two half-coedge and two diagonal arcs per
// edge index. Arcs are listed by smaller endpoint, then by side.
FlagGraph BuildFlagGraph(const CombinatorialMap& map);

// True when `side` of `flag` lies on the closure of an element of `cuts`.
bool IsCutSide(Flag flag, Side side, const CutSet& cuts);

// Connected components of the flag graph with cut sides removed; returns the
// component id of every flag.
std::vector<int> CutComponents(const CombinatorialMap& map, const CutSet& cuts,
                               int* num_components = nullptr);

// The complement of the closure of `cuts` is connected. `cuts` must be
// admissible (InvalidArgument otherwise).
bool IsIndependent(const CombinatorialMap& map, const CutSet& cuts);

struct CutSurface {
  int components = 0;
  int boundary_components = 0;
  int euler_characteristic = 0;

  bool is_disk() const {
    return components == 1 && boundary_components == 1 &&
           euler_characteristic == 1;
  }
  bool is_annulus() const {
    return components == 1 && boundary_components == 2 &&
           euler_characteristic == 0;
  }
};

// Statistics of the compact surface obtained by cutting along the closure of
// `cuts`: both sides of every cut become boundary, and every subdivision
// vertex splits into one copy per sector between consecutive cuts around it.
CutSurface CutAlong(const CombinatorialMap& map, const CutSet& cuts);

// T u (E \ T)* for the spanning tree T chosen greedily by lowest edge index.
CutSet SpanningTreeBasis(const CombinatorialMap& map);

// Identifies the two endpoints of non-loop edge `edge` and deletes it (and
// its coedge). Remaining edges above `edge` are renumbered down by one.
CombinatorialMap ContractEdge(const CombinatorialMap& map, int edge);

}  // namespace lagmap
