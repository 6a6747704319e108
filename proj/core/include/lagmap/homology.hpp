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

#include <gmpxx.h>

#include <array>
#include <vector>

#include "lagmap/cut_set.hpp"
#include "lagmap/delta_matroid.hpp"
#include "lagmap/exact_matrix.hpp"
#include "lagmap/map.hpp"

namespace lagmap {

// The flag graph with a signed crossing number on every arc. A cycle in this
// graph avoids every vertex of the barycentric subdivision, so its crossing
// numbers with edges and coedges are well defined.
//
// Sign convention, with the surface oriented by the counterclockwise
// rotations: a cycle crossing an oriented edge or coedge from its left to
// its right counts +1. Coedges are oriented so that each edge meets its
// coedge with index +1.
struct SpineArc {
  Flag from;
  Flag to;
  Side side;
  int edge;  // 0 for diagonals
  int sign;  // crossing number when traversed from -> to; 0 for diagonals
};

struct SpineGraph {
  int num_edges = 0;
  int num_flags = 0;
  std::vector<SpineArc> arcs;
  std::vector<std::array<int, 3>> arc_of;  // indexed [flag][side]

  int cycle_rank() const {
    return static_cast<int>(arcs.size()) - num_flags + 1;
  }
};

SpineGraph BuildSpine(const CombinatorialMap& map);

struct CycleStep {
  int arc;
  bool forward;
};

// A closed walk. An empty step list is the constant cycle at `start`.
struct Cycle {
  Flag start;
  std::vector<CycleStep> steps;
};

bool IsClosedWalk(const SpineGraph& spine, const Cycle& cycle);

// Fundamental cycles of the breadth-first spanning tree rooted at flag 0;
// 2n + 1 of them.
std::vector<Cycle> CycleBasis(const SpineGraph& spine);

// Small cycles around one subdivision vertex.
Cycle VertexLink(const CombinatorialMap& map, const SpineGraph& spine,
                 int vertex);
Cycle FaceLink(const CombinatorialMap& map, const SpineGraph& spine, int face);
Cycle CrossingLink(const CombinatorialMap& map, const SpineGraph& spine,
                   int edge);

// Coordinates 0..n-1 are the edges, n..2n-1 the coedges.
class IncidenceVector {
 public:
  explicit IncidenceVector(int n) : n_(n), coords_(2 * n) {}
  IncidenceVector(int n, std::vector<mpz_class> coords);

  int n() const { return n_; }
  const mpz_class& operator[](Element e) const {
    return coords_[Column(e)];
  }
  mpz_class& operator[](Element e) { return coords_[Column(e)]; }
  const std::vector<mpz_class>& coords() const { return coords_; }
  bool is_zero() const;

  int Column(Element e) const { return e.starred ? n_ + e.index - 1 : e.index - 1; }

  IncidenceVector& operator+=(const IncidenceVector& other);
  friend bool operator==(const IncidenceVector&, const IncidenceVector&) = default;

 private:
  int n_;
  std::vector<mpz_class> coords_;
};

IncidenceVector Incidence(const SpineGraph& spine, const Cycle& cycle);

// Hyperbolic form sum_i (u_i v_i* + u_i* v_i); reduced mod 2 over GF(2).
mpz_class PairProduct(const IncidenceVector& u, const IncidenceVector& v,
                      Field field = Field::kRationals);

// Rows span the image of the incidence map: an n x 2n matrix (A | B) with
// columns 1..n | 1*..n*.
struct Representation {
  ExactMatrix a;
  ExactMatrix b;
  Field field;

  int n() const { return a.rows(); }
  ExactMatrix matrix() const { return HorizontalConcat(a, b); }
};

// Canonical form: reduced row echelon form of the stacked incidence vectors
// with zero rows dropped. Throws PropertyViolation if the rank is not n.
Representation RepresentationFromCycles(const SpineGraph& spine,
                                        const std::vector<Cycle>& cycles,
                                        Field field);

// Signed-mode maps need Field::kGf2 (InvalidArgument otherwise).
Representation BuildRepresentation(const CombinatorialMap& map, Field field);

// Columns indexed by the elements of `s` are linearly independent.
bool IndependentInRepresentation(const Representation& rep, const CutSet& s);

// Admissible n-sets whose n x n minor is nonzero.
BasisFamily MatroidFromRepresentation(const Representation& rep);

}  // namespace lagmap
