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

#include <string>
#include <vector>

#include "lagmap/cut_set.hpp"
#include "lagmap/map.hpp"

namespace lagmap {

enum class Preference { kEdge, kCoedge };

enum class Decision { kCutEdge, kCutCoedge, kTraverse };

enum class Shape { kDisk, kAnnulus, kOther };

std::string ShapeName(Shape shape);

// One triangle of the peel: the side crossed to leave it and what was done
// there.
struct PeelStep {
  Flag flag;
  Side crossed;
  Decision decision;
};

struct PeelTrace {
  Flag start;
  std::vector<PeelStep> steps;
  CutSet cuts;
  Shape shape = Shape::kOther;
};

// Walks the barycentric triangles from `start`. At a triangle whose edge and
// coedge are both uncut, cuts whichever keeps the surface connected (`prefer`
// breaks ties) and leaves across the other one. Otherwise leaves across the
// diagonal or the uncut side, whichever it did not enter through. The start
// triangle counts as entered through its diagonal. Stops on reaching a
// visited triangle.
//
// Requires an orientable-mode map.
PeelTrace Peel(const CombinatorialMap& map, Flag start,
               Preference prefer = Preference::kEdge);

struct TraceReport {
  std::vector<std::string> problems;

  bool ok() const { return problems.empty(); }
};

// Re-derives every property of a trace from the map alone: every flag
// exactly once, consecutive flags adjacent across the recorded uncut side,
// cut set admissible of size n and a basis, every prefix of cuts
// independent, and the recorded shape matching the cut surface.
TraceReport VerifyTrace(const CombinatorialMap& map, const PeelTrace& trace);

// "<flag> <side> <decision>" per step, then "cuts: ..." and "shape: ...".
std::string WriteTrace(const PeelTrace& trace, bool with_steps);

}  // namespace lagmap
