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

#include <filesystem>
#include <string>
#include <string_view>

#include "lagmap/map.hpp"

namespace lagmap {

// Map file format (UTF-8, one statement per line, '#' starts a comment):
//
//   mode orientable|signed
//   edges <n>
//   vertex <name>: <dart> <dart> ...     (counterclockwise order)
//   sign <i> -                           (signed mode only; default +)
//
// Darts are written "<i>+" or "<i>-" (U+2212 is accepted for the minus).
// Errors are reported as ParseError with the offending line and column.
CombinatorialMap ParseMap(std::string_view text);

CombinatorialMap LoadMap(const std::filesystem::path& path);

// Canonical text: vertices in id order, each starting at its smallest dart,
// sign lines only for negative edges. ParseMap(WriteMap(m)) reproduces m.
std::string WriteMap(const CombinatorialMap& map);

}  // namespace lagmap
