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

#include "lagmap/homology.hpp"

#include <algorithm>
#include <deque>

#include "lagmap/error.hpp"

namespace lagmap {
namespace {

CycleStep StepAcross(const SpineGraph& spine, Flag from, Side side) {
  const int arc = spine.arc_of[from.id][static_cast<int>(side)];
  return {arc, spine.arcs[arc].from == from};
}

Cycle WalkAround(const CombinatorialMap& map, const SpineGraph& spine,
                 Flag start, Side first, Side second) {
  Cycle c{start, {}};
  Flag cur = start;
  do {
    const Side s = c.steps.size() % 2 == 0 ? first : second;
    c.steps.push_back(StepAcross(spine, cur, s));
    cur = map.across(cur, s);
  } while (!(cur == start && c.steps.size() % 2 == 0));
  return c;
}

std::vector<int> ColumnsOf(int n, const CutSet& s) {
  std::vector<int> cols;
  for (Element e : s.elements()) {
    cols.push_back(e.starred ? n + e.index - 1 : e.index - 1);
  }
  return cols;
}

}  // namespace

SpineGraph BuildSpine(const CombinatorialMap& map) {
  SpineGraph g;
  g.num_edges = map.num_edges();
  g.num_flags = map.num_flags();
  g.arc_of.assign(g.num_flags, {-1, -1, -1});
  for (int f = 0; f < g.num_flags; ++f) {
    for (Side s : {Side::kHalfEdge, Side::kHalfCoedge, Side::kDiagonal}) {
      Flag from{f};
      Flag to = map.across(from, s);
      if (from.id > to.id) continue;
      SpineArc arc{from, to, s, 0, 0};
      if (s == Side::kHalfEdge) {
        // from = ccw side of its dart. Leaving the ccw side of i+ goes from
        // the left of edge i to its right.
        arc.edge = from.edge();
        arc.sign = from.dart().minus() ? -1 : 1;
      } else if (s == Side::kHalfCoedge) {
        // from sits on the tail end (dart i+); the tail is on the left of
        // the coedge.
        arc.edge = from.edge();
        arc.sign = 1;
      }
      const int id = static_cast<int>(g.arcs.size());
      g.arc_of[from.id][static_cast<int>(s)] = id;
      g.arc_of[to.id][static_cast<int>(s)] = id;
      g.arcs.push_back(arc);
    }
  }
  return g;
}

bool IsClosedWalk(const SpineGraph& spine, const Cycle& cycle) {
  Flag cur = cycle.start;
  for (const CycleStep& step : cycle.steps) {
    if (step.arc < 0 || step.arc >= static_cast<int>(spine.arcs.size())) {
      return false;
    }
    const SpineArc& arc = spine.arcs[step.arc];
    const Flag tail = step.forward ? arc.from : arc.to;
    if (tail != cur) return false;
    cur = step.forward ? arc.to : arc.from;
  }
  return cur == cycle.start;
}

std::vector<Cycle> CycleBasis(const SpineGraph& spine) {
  const int flags = spine.num_flags;
  std::vector<int> parent_arc(flags, -1);
  std::vector<bool> reached(flags, false);
  std::vector<bool> tree_arc(spine.arcs.size(), false);
  std::deque<int> queue{0};
  reached[0] = true;
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (int side = 0; side < 3; ++side) {
      const int a = spine.arc_of[f][side];
      const SpineArc& arc = spine.arcs[a];
      const int g = arc.from.id == f ? arc.to.id : arc.from.id;
      if (reached[g]) continue;
      reached[g] = true;
      parent_arc[g] = a;
      tree_arc[a] = true;
      queue.push_back(g);
    }
  }

  // Tree path from the root down to f.
  auto path_from_root = [&](int f) {
    std::vector<CycleStep> up;
    while (parent_arc[f] >= 0) {
      const SpineArc& arc = spine.arcs[parent_arc[f]];
      const bool f_is_to = arc.to.id == f;
      up.push_back({parent_arc[f], f_is_to});
      f = f_is_to ? arc.from.id : arc.to.id;
    }
    std::reverse(up.begin(), up.end());
    return up;
  };

  std::vector<Cycle> cycles;
  for (int a = 0; a < static_cast<int>(spine.arcs.size()); ++a) {
    if (tree_arc[a]) continue;
    const SpineArc& arc = spine.arcs[a];
    Cycle c{Flag{0}, path_from_root(arc.from.id)};
    c.steps.push_back({a, true});
    std::vector<CycleStep> back = path_from_root(arc.to.id);
    for (auto it = back.rbegin(); it != back.rend(); ++it) {
      c.steps.push_back({it->arc, !it->forward});
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

Cycle VertexLink(const CombinatorialMap& map, const SpineGraph& spine,
                 int vertex) {
  return WalkAround(map, spine, Flag::Of(map.rotation()[vertex].front(), true),
                    Side::kHalfEdge, Side::kDiagonal);
}

Cycle FaceLink(const CombinatorialMap& map, const SpineGraph& spine, int face) {
  for (int f = 0; f < map.num_flags(); ++f) {
    if (map.face_of(Flag{f}) == face) {
      return WalkAround(map, spine, Flag{f}, Side::kHalfCoedge,
                        Side::kDiagonal);
    }
  }
  throw InvalidArgument("face " + std::to_string(face) + " does not exist");
}

Cycle CrossingLink(const CombinatorialMap& map, const SpineGraph& spine,
                   int edge) {
  return WalkAround(map, spine, Flag::Of(Dart::Plus(edge), true),
                    Side::kHalfEdge, Side::kHalfCoedge);
}

IncidenceVector::IncidenceVector(int n, std::vector<mpz_class> coords)
    : n_(n), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != 2 * n) {
    throw InvalidArgument("incidence vector needs 2n coordinates");
  }
}

bool IncidenceVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const mpz_class& v) { return v == 0; });
}

IncidenceVector& IncidenceVector::operator+=(const IncidenceVector& other) {
  if (other.n_ != n_) throw InvalidArgument("incidence vector size mismatch");
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += other.coords_[k];
  return *this;
}

IncidenceVector Incidence(const SpineGraph& spine, const Cycle& cycle) {
  IncidenceVector v(spine.num_edges);
  for (const CycleStep& step : cycle.steps) {
    const SpineArc& arc = spine.arcs[step.arc];
    if (arc.side == Side::kDiagonal) continue;
    const int sign = step.forward ? arc.sign : -arc.sign;
    v[{arc.edge, arc.side == Side::kHalfCoedge}] += sign;
  }
  return v;
}

mpz_class PairProduct(const IncidenceVector& u, const IncidenceVector& v,
                      Field field) {
  if (u.n() != v.n()) throw InvalidArgument("incidence vector size mismatch");
  mpz_class sum = 0;
  for (int i = 1; i <= u.n(); ++i) {
    sum += u[{i, false}] * v[{i, true}] + u[{i, true}] * v[{i, false}];
  }
  if (field == Field::kGf2) sum = sum % 2 == 0 ? 0 : 1;
  return sum;
}

Representation RepresentationFromCycles(const SpineGraph& spine,
                                        const std::vector<Cycle>& cycles,
                                        Field field) {
  const int n = spine.num_edges;
  std::vector<std::vector<mpq_class>> rows;
  for (const Cycle& c : cycles) {
    const IncidenceVector v = Incidence(spine, c);
    rows.emplace_back(v.coords().begin(), v.coords().end());
  }
  const ExactMatrix reduced =
      Rref(ExactMatrix::FromRows(rows, 2 * n, field)).without_zero_rows();
  if (reduced.rows() != n) {
    throw PropertyViolation("incidence vectors span a space of dimension " +
                            std::to_string(reduced.rows()) + ", expected " +
                            std::to_string(n));
  }
  return {reduced.column_block(0, n), reduced.column_block(n, n), field};
}

Representation BuildRepresentation(const CombinatorialMap& map, Field field) {
  if (map.mode() == Mode::kSigned && field == Field::kRationals) {
    throw InvalidArgument("non-orientable map requires gf2");
  }
  const SpineGraph spine = BuildSpine(map);
  return RepresentationFromCycles(spine, CycleBasis(spine), field);
}

bool IndependentInRepresentation(const Representation& rep, const CutSet& s) {
  if (!s.admissible()) throw InvalidArgument("cut set is not admissible");
  if (s.max_index() > rep.n()) throw InvalidArgument("element out of range");
  const std::vector<int> cols = ColumnsOf(rep.n(), s);
  return ColumnsIndependent(rep.matrix(), cols);
}

BasisFamily MatroidFromRepresentation(const Representation& rep) {
  const ExactMatrix m = rep.matrix();
  std::vector<CutSet> bases;
  for (const CutSet& s : GroundSet(rep.n()).AdmissibleSubsets(rep.n())) {
    if (ColumnsIndependent(m, ColumnsOf(rep.n(), s))) bases.push_back(s);
  }
  return BasisFamily(rep.n(), std::move(bases));
}

}  // namespace lagmap
