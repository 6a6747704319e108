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

#include "lagmap/topology.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lagmap/error.hpp"

namespace lagmap {
namespace {

constexpr Side kAllSides[] = {Side::kHalfEdge, Side::kHalfCoedge,
                              Side::kDiagonal};

class DisjointSets {
 public:
  explicit DisjointSets(int size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool Unite(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

struct LinkStep {
  Flag from;
  Side side;
};

// The cycle of triangles around one subdivision vertex, alternating between
// the two side kinds that meet there.
std::vector<LinkStep> WalkLink(const CombinatorialMap& map, Flag start,
                               Side first, Side second) {
  std::vector<LinkStep> steps;
  Flag cur = start;
  do {
    const Side s = steps.size() % 2 == 0 ? first : second;
    steps.push_back({cur, s});
    cur = map.across(cur, s);
  } while (!(cur == start && steps.size() % 2 == 0));
  return steps;
}

// The flag of the half-coedge pair {f, across(f, coedge)} that sits on the
// plus dart decides the dual dart: ccw side -> i-, cw side -> i+.
Dart DualDartOf(const CombinatorialMap& map, Flag f) {
  Flag on_plus = f.dart().minus() ? map.across(f, Side::kHalfCoedge) : f;
  const int edge = f.edge();
  return on_plus.ccw_side() ? Dart::Minus(edge) : Dart::Plus(edge);
}

void CheckAdmissible(const CombinatorialMap& map, const CutSet& cuts) {
  if (!cuts.admissible()) {
    throw InvalidArgument("cut set {" + cuts.to_string() +
                          "} is not admissible");
  }
  if (cuts.max_index() > map.num_edges()) {
    throw InvalidArgument("cut set {" + cuts.to_string() +
                          "} names a missing edge");
  }
}

}  // namespace

MapInfo GetMapInfo(const CombinatorialMap& map) {
  MapInfo info;
  info.num_vertices = map.num_vertices();
  info.num_edges = map.num_edges();
  info.num_faces = map.num_faces();
  info.euler_characteristic = map.euler_characteristic();
  info.orientable = map.orientable();
  info.genus = info.orientable ? (2 - info.euler_characteristic) / 2
                               : 2 - info.euler_characteristic;
  return info;
}

CombinatorialMap DualMap(const CombinatorialMap& map) {
  const int flags = map.num_flags();
  std::vector<std::vector<Flag>> face_flags(map.num_faces());
  for (int f = 0; f < flags; ++f) face_flags[map.face_of(Flag{f})].push_back({f});

  std::vector<bool> positive(flags, false);
  std::vector<std::vector<Dart>> rotation;
  std::vector<std::string> names;
  for (int face = 0; face < map.num_faces(); ++face) {
    Flag start = face_flags[face].front();
    if (map.orientable()) {
      // Counterclockwise around a face centre runs against the flag colour.
      for (Flag f : face_flags[face]) {
        if (map.flag_orientation(f) < 0) {
          start = f;
          break;
        }
      }
    }
    std::vector<Dart> cycle;
    Flag cur = start;
    do {
      positive[cur.id] = true;
      cycle.push_back(DualDartOf(map, cur));
      cur = map.across(map.across(cur, Side::kDiagonal), Side::kHalfCoedge);
    } while (cur != start);
    rotation.push_back(std::move(cycle));
    names.push_back("f" + std::to_string(face + 1));
  }

  std::vector<int> signs(map.num_edges(), 1);
  for (int f = 0; f < flags; ++f) {
    Flag flag{f};
    if (!positive[f]) continue;
    if (DualDartOf(map, flag) != Dart::Plus(flag.edge())) continue;
    if (positive[map.across(flag, Side::kHalfEdge).id]) {
      signs[flag.edge() - 1] = -1;
    }
  }
  return CombinatorialMap(map.mode(), map.num_edges(), std::move(rotation),
                          std::move(signs), std::move(names));
}

bool Isomorphic(const CombinatorialMap& a, const CombinatorialMap& b) {
  if (a.num_edges() != b.num_edges() || a.num_vertices() != b.num_vertices() ||
      a.num_faces() != b.num_faces()) {
    return false;
  }
  const int flags = a.num_flags();
  for (int target = 0; target < flags; ++target) {
    std::vector<int> image(flags, -1);
    std::vector<bool> used(flags, false);
    image[0] = target;
    used[target] = true;
    std::vector<int> stack{0};
    bool ok = true;
    while (ok && !stack.empty()) {
      Flag f{stack.back()};
      stack.pop_back();
      for (Side s : kAllSides) {
        const int ga = a.across(f, s).id;
        const int gb = b.across(Flag{image[f.id]}, s).id;
        if (image[ga] < 0) {
          if (used[gb]) {
            ok = false;
            break;
          }
          image[ga] = gb;
          used[gb] = true;
          stack.push_back(ga);
        } else if (image[ga] != gb) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  }
  return false;
}

FlagGraph BuildFlagGraph(const CombinatorialMap& map) {
  FlagGraph g;
  g.num_flags = map.num_flags();
  g.arc_of.assign(g.num_flags, {-1, -1, -1});
  for (int f = 0; f < g.num_flags; ++f) {
    for (Side s : kAllSides) {
      Flag from{f};
      Flag to = map.across(from, s);
      if (from.id < to.id) {
        const int edge = s == Side::kDiagonal ? 0 : from.edge();
        g.arc_of[from.id][static_cast<int>(s)] = static_cast<int>(g.arcs.size());
        g.arc_of[to.id][static_cast<int>(s)] = static_cast<int>(g.arcs.size());
        g.arcs.push_back({from, to, s, edge});
      }
    }
  }
  return g;
}

bool IsCutSide(Flag flag, Side side, const CutSet& cuts) {
  switch (side) {
    case Side::kHalfEdge:
      return cuts.contains({flag.edge(), false});
    case Side::kHalfCoedge:
      return cuts.contains({flag.edge(), true});
    case Side::kDiagonal:
      return false;
  }
  return false;
}

std::vector<int> CutComponents(const CombinatorialMap& map, const CutSet& cuts,
                               int* num_components) {
  const int flags = map.num_flags();
  std::vector<int> component(flags, -1);
  int count = 0;
  for (int start = 0; start < flags; ++start) {
    if (component[start] >= 0) continue;
    component[start] = count;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      Flag f{stack.back()};
      stack.pop_back();
      for (Side s : kAllSides) {
        if (IsCutSide(f, s, cuts)) continue;
        Flag g = map.across(f, s);
        if (component[g.id] < 0) {
          component[g.id] = count;
          stack.push_back(g.id);
        }
      }
    }
    ++count;
  }
  if (num_components) *num_components = count;
  return component;
}

bool IsIndependent(const CombinatorialMap& map, const CutSet& cuts) {
  CheckAdmissible(map, cuts);
  int count = 0;
  CutComponents(map, cuts, &count);
  return count == 1;
}

CutSurface CutAlong(const CombinatorialMap& map, const CutSet& cuts) {
  CheckAdmissible(map, cuts);
  CutSurface out;
  CutComponents(map, cuts, &out.components);

  const int n = map.num_edges();
  const int cut_arcs = 2 * cuts.size();
  DisjointSets boundary(3 * map.num_flags());
  auto side_id = [](Flag f, Side s) { return 3 * f.id + static_cast<int>(s); };

  int point_copies = 0;
  auto visit_point = [&](const std::vector<LinkStep>& link) {
    std::vector<int> cut_steps;
    for (int j = 0; j < static_cast<int>(link.size()); ++j) {
      if (IsCutSide(link[j].from, link[j].side, cuts)) cut_steps.push_back(j);
    }
    point_copies += std::max<int>(1, static_cast<int>(cut_steps.size()));
    // Each sector between consecutive cuts glues the two boundary sides that
    // bound it at this point.
    for (std::size_t c = 0; c < cut_steps.size(); ++c) {
      const LinkStep& a = link[cut_steps[c]];
      const LinkStep& b = link[cut_steps[(c + 1) % cut_steps.size()]];
      Flag after_a = map.across(a.from, a.side);
      boundary.Unite(side_id(after_a, a.side), side_id(b.from, b.side));
    }
  };

  for (int v = 0; v < map.num_vertices(); ++v) {
    visit_point(WalkLink(map, Flag::Of(map.rotation()[v].front(), true),
                         Side::kHalfEdge, Side::kDiagonal));
  }
  std::vector<bool> face_done(map.num_faces(), false);
  for (int f = 0; f < map.num_flags(); ++f) {
    const int face = map.face_of(Flag{f});
    if (face_done[face]) continue;
    face_done[face] = true;
    visit_point(WalkLink(map, Flag{f}, Side::kHalfCoedge, Side::kDiagonal));
  }
  for (int i = 1; i <= n; ++i) {
    visit_point(WalkLink(map, Flag::Of(Dart::Plus(i), true), Side::kHalfEdge,
                         Side::kHalfCoedge));
  }

  std::set<int> circles;
  for (int f = 0; f < map.num_flags(); ++f) {
    for (Side s : {Side::kHalfEdge, Side::kHalfCoedge}) {
      if (IsCutSide(Flag{f}, s, cuts)) {
        circles.insert(boundary.Find(side_id(Flag{f}, s)));
      }
    }
  }
  out.boundary_components = static_cast<int>(circles.size());
  out.euler_characteristic =
      point_copies - (6 * n + cut_arcs) + map.num_flags();
  return out;
}

CutSet SpanningTreeBasis(const CombinatorialMap& map) {
  DisjointSets trees(map.num_vertices());
  CutSet basis;
  for (int i = 1; i <= map.num_edges(); ++i) {
    const bool tree_edge = trees.Unite(map.vertex_of(Dart::Plus(i)),
                                       map.vertex_of(Dart::Minus(i)));
    basis.insert({i, !tree_edge});
  }
  return basis;
}

CombinatorialMap ContractEdge(const CombinatorialMap& map, int edge) {
  if (edge < 1 || edge > map.num_edges()) {
    throw InvalidArgument("edge " + std::to_string(edge) + " does not exist");
  }
  if (map.is_loop(edge)) {
    throw InvalidArgument("edge " + std::to_string(edge) + " is a loop");
  }
  if (map.num_edges() == 1) {
    throw InvalidArgument(
        "contraction would produce the excluded trivial map");
  }

  std::vector<std::vector<Dart>> rotation = map.rotation();
  std::vector<int> signs = map.edge_signs();
  std::vector<std::string> names;
  for (int v = 0; v < map.num_vertices(); ++v) names.push_back(map.vertex_name(v));

  const Dart tail = Dart::Plus(edge);
  const Dart head = Dart::Minus(edge);
  const int u = map.vertex_of(tail);
  const int v = map.vertex_of(head);

  if (signs[edge - 1] < 0) {
    // Flip the local orientation at v so the contracted edge is untwisted.
    std::reverse(rotation[v].begin(), rotation[v].end());
    std::vector<int> ends(map.num_edges() + 1, 0);
    for (Dart d : rotation[v]) ++ends[d.edge()];
    for (int j = 1; j <= map.num_edges(); ++j) {
      if (ends[j] == 1) signs[j - 1] = -signs[j - 1];
    }
  }

  auto after = [](std::vector<Dart> cycle, Dart first) {
    std::rotate(cycle.begin(), std::find(cycle.begin(), cycle.end(), first),
                cycle.end());
    cycle.erase(cycle.begin());
    return cycle;
  };
  std::vector<Dart> merged = after(rotation[u], tail);
  std::vector<Dart> from_v = after(rotation[v], head);
  merged.insert(merged.end(), from_v.begin(), from_v.end());

  auto renumber = [edge](Dart d) {
    return d.edge() > edge ? Dart{d.id - 2} : d;
  };
  std::vector<std::vector<Dart>> new_rotation;
  std::vector<std::string> new_names;
  for (int w = 0; w < map.num_vertices(); ++w) {
    if (w == v) continue;
    std::vector<Dart> cycle = w == u ? merged : rotation[w];
    for (Dart& d : cycle) d = renumber(d);
    new_rotation.push_back(std::move(cycle));
    new_names.push_back(names[w]);
  }
  signs.erase(signs.begin() + (edge - 1));
  return CombinatorialMap(map.mode(), map.num_edges() - 1,
                          std::move(new_rotation), std::move(signs),
                          std::move(new_names));
}

}  // namespace lagmap
