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

// Reference computations that share no code path with the library routines
// they are compared against.

#include <gmpxx.h>

#include <vector>

#include "lagmap/cut_set.hpp"
#include "lagmap/map.hpp"

namespace lagmap::testing {

using RationalRows = std::vector<std::vector<mpq_class>>;

// Textbook Gauss-Jordan over mpq with the first nonzero pivot; zero rows
// are dropped.
RationalRows NaiveRref(RationalRows rows);

// Leibniz expansion over all permutations.
mpq_class LeibnizDeterminant(const RationalRows& square);

// Bases T u (E \ T)* where the ribbon subgraph (V, T) has exactly one
// boundary component, counted by face tracing restricted to T. Orientable
// mode only.
std::vector<CutSet> QuasiTreeBases(const CombinatorialMap& map);

// Algebraic intersection number of two loops at the same vertex, read from
// how their darts interleave in the rotation. The loop runs in along its
// minus dart and out along its plus dart.
int LoopIntersection(const CombinatorialMap& map, int a, int b);

// Euler characteristic of the surface cut along cl(F), via
// chi(S) - chi(cl F) with cl(F) viewed as a graph.
int CutEulerCharacteristicByClosure(const CombinatorialMap& map,
                                    const CutSet& cuts);

}  // namespace lagmap::testing
