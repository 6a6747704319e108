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

#include "lagmap/peeler.hpp"

#include <set>
#include <sstream>

#include "lagmap/delta_matroid.hpp"
#include "lagmap/error.hpp"
#include "lagmap/topology.hpp"

namespace lagmap {
namespace {

Shape ClassifyCut(const CombinatorialMap& map, const CutSet& cuts) {
  const CutSurface s = CutAlong(map, cuts);
  if (s.is_disk()) return Shape::kDisk;
  if (s.is_annulus()) return Shape::kAnnulus;
  return Shape::kOther;
}

std::string SideLabel(Side side, int edge) {
  if (side == Side::kDiagonal) return "diagonal";
  return SideName(side) + "(" + std::to_string(edge) + ")";
}

std::string DecisionLabel(Decision d, int edge) {
  switch (d) {
    case Decision::kCutEdge:
      return "cut-edge(" + std::to_string(edge) + ")";
    case Decision::kCutCoedge:
      return "cut-coedge(" + std::to_string(edge) + ")";
    case Decision::kTraverse:
      return "traverse";
  }
  return "?";
}

}  // namespace

std::string ShapeName(Shape shape) {
  switch (shape) {
    case Shape::kDisk:
      return "disk";
    case Shape::kAnnulus:
      return "annulus";
    case Shape::kOther:
      return "other";
  }
  return "?";
}

PeelTrace Peel(const CombinatorialMap& map, Flag start, Preference prefer) {
  if (start.id < 0 || start.id >= map.num_flags()) {
    throw InvalidArgument("flag " + std::to_string(start.id) +
                          " is not a flag of the map");
  }
  if (map.mode() != Mode::kOrientable) {
    throw InvalidArgument("peeling requires an orientable-mode map");
  }
  PeelTrace trace;
  trace.start = start;
  std::vector<bool> visited(map.num_flags(), false);
  Flag cur = start;
  Side entered = Side::kDiagonal;
  while (true) {
    visited[cur.id] = true;
    const int i = cur.edge();
    const Element edge{i, false};
    const Element coedge{i, true};
    PeelStep step{cur, Side::kDiagonal, Decision::kTraverse};
    if (!trace.cuts.contains(edge) && !trace.cuts.contains(coedge)) {
      const Element first = prefer == Preference::kEdge ? edge : coedge;
      Element chosen = first.star();
      CutSet attempt = trace.cuts;
      attempt.insert(first);
      if (IsIndependent(map, attempt)) {
        chosen = first;
      } else {
        attempt = trace.cuts;
        attempt.insert(chosen);
        if (!IsIndependent(map, attempt)) {
          throw PropertyViolation("neither " + edge.to_string() + " nor " +
                                  coedge.to_string() +
                                  " keeps the surface connected");
        }
      }
      trace.cuts.insert(chosen);
      step.decision = chosen.starred ? Decision::kCutCoedge : Decision::kCutEdge;
      step.crossed = chosen.starred ? Side::kHalfEdge : Side::kHalfCoedge;
    } else {
      const Side uncut = trace.cuts.contains(edge) ? Side::kHalfCoedge
                                                   : Side::kHalfEdge;
      step.crossed = entered == Side::kDiagonal ? uncut : Side::kDiagonal;
    }
    trace.steps.push_back(step);
    const Flag next = map.across(cur, step.crossed);
    if (visited[next.id]) break;
    entered = step.crossed;
    cur = next;
  }
  trace.shape = ClassifyCut(map, trace.cuts);
  return trace;
}

TraceReport VerifyTrace(const CombinatorialMap& map, const PeelTrace& trace) {
  TraceReport report;
  auto problem = [&](std::string text) {
    report.problems.push_back(std::move(text));
  };
  const int flags = map.num_flags();
  if (trace.steps.empty()) {
    problem("empty trace");
    return report;
  }
  if (trace.steps.front().flag != trace.start) {
    problem("first step is not the start flag");
  }

  std::set<int> seen;
  for (const PeelStep& s : trace.steps) {
    if (s.flag.id < 0 || s.flag.id >= flags) {
      problem("flag " + std::to_string(s.flag.id) + " is not in the map");
      return report;
    }
    if (!seen.insert(s.flag.id).second) {
      problem("flag revisited: " + std::to_string(s.flag.id));
    }
  }
  if (static_cast<int>(trace.steps.size()) != flags) {
    problem("visited " + std::to_string(trace.steps.size()) + " of " +
            std::to_string(flags) + " flags");
  }

  for (std::size_t j = 0; j < trace.steps.size(); ++j) {
    const PeelStep& s = trace.steps[j];
    const Flag next = map.across(s.flag, s.crossed);
    if (j + 1 < trace.steps.size() && next != trace.steps[j + 1].flag) {
      problem("step " + std::to_string(j) + " does not lead to the next flag");
    }
    if (j + 1 == trace.steps.size() && !seen.count(next.id)) {
      problem("trace stops before returning to a visited flag");
    }
    if (trace.cuts.admissible() && IsCutSide(s.flag, s.crossed, trace.cuts)) {
      problem("step " + std::to_string(j) + " crosses a cut side");
    }
  }

  if (!trace.cuts.admissible()) {
    problem("inadmissible cut set");
    return report;
  }
  if (trace.cuts.max_index() > map.num_edges()) {
    problem("cut set names a missing edge");
    return report;
  }
  if (trace.cuts.size() != map.num_edges()) {
    problem("cut set has " + std::to_string(trace.cuts.size()) +
            " elements, expected " + std::to_string(map.num_edges()));
  }

  CutSet prefix;
  bool prefixes_ok = true;
  for (const PeelStep& s : trace.steps) {
    if (s.decision == Decision::kTraverse) continue;
    prefix.insert({s.flag.edge(), s.decision == Decision::kCutCoedge});
    if (prefixes_ok && (!prefix.admissible() || !IsIndependent(map, prefix))) {
      problem("cut prefix {" + prefix.to_string() +
              "} disconnects the surface");
      prefixes_ok = false;
    }
  }
  if (prefix != trace.cuts) problem("cut decisions disagree with the cut set");

  if (trace.cuts.size() == map.num_edges() &&
      !IsBasis(EnumerateBases(map), trace.cuts)) {
    problem("cut set is not a basis");
  }

  const Shape actual = ClassifyCut(map, trace.cuts);
  if (actual == Shape::kOther) {
    problem("cut surface is neither a disk nor an annulus");
  } else if (actual != trace.shape) {
    problem("recorded shape " + ShapeName(trace.shape) + " but cut surface is " +
            ShapeName(actual));
  }
  return report;
}

std::string WriteTrace(const PeelTrace& trace, bool with_steps) {
  std::ostringstream out;
  if (with_steps) {
    for (const PeelStep& s : trace.steps) {
      out << s.flag.id << " " << SideLabel(s.crossed, s.flag.edge()) << " "
          << DecisionLabel(s.decision, s.flag.edge()) << "\n";
    }
  }
  out << "cuts: " << trace.cuts.to_string() << "\n";
  out << "shape: " << ShapeName(trace.shape) << "\n";
  return out.str();
}

}  // namespace lagmap
