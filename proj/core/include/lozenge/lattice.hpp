// Copyright 2026 The Lozenge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lozenge/rational.hpp"

namespace lozenge {

enum class Orientation : std::uint8_t { Up, Down };

// A unit triangle of the triangular lattice.
//
// Addressing convention: `layer` counts horizontal strips downward from the
// top of the region; `index` is twice the horizontal coordinate of the
// triangle's centroid, measured in unit edges. Consecutive cells of a layer
// therefore differ by 1 in `index` and alternate orientation, and the parity
// rule below fixes which is which. An Up cell at (L, i) shares its base with
// the Down cell at (L + 1, i) directly below it.
struct TriangleCell {
  int layer = 0;
  int index = 0;
  Orientation orientation = Orientation::Up;

  auto operator<=>(const TriangleCell&) const = default;
};

// Up iff layer + index is even.
constexpr Orientation orientation_at(int layer, int index) {
  return ((layer + index) % 2 == 0) ? Orientation::Up : Orientation::Down;
}

constexpr TriangleCell cell_at(int layer, int index) {
  return TriangleCell{layer, index, orientation_at(layer, index)};
}

// True when the stored orientation agrees with the parity rule and both
// coordinates are non-negative.
bool well_formed(const TriangleCell& cell);

// Lattice-adjacent cells in the order: horizontal-left, horizontal-right,
// vertical. Neighbors with a negative coordinate are omitted.
std::vector<TriangleCell> neighbors(const TriangleCell& cell);

bool adjacent(const TriangleCell& a, const TriangleCell& b);

// Unordered adjacent Up/Down pair, stored Up first.
struct EdgeKey {
  TriangleCell up;
  TriangleCell down;

  auto operator<=>(const EdgeKey&) const = default;
};

// Normalizes the pair order; returns nothing when a and b are not an adjacent
// Up/Down pair.
std::optional<EdgeKey> edge_key(const TriangleCell& a, const TriangleCell& b);

enum class LozengeKind : std::uint8_t {
  Vertical,   // Up above Down, sharing a horizontal edge
  UpLeft,     // Up on the left, Down on the right
  DownLeft,   // Down on the left, Up on the right
};

struct LozengePlacement {
  TriangleCell up;
  TriangleCell down;
  ExactRational weight{1};

  LozengeKind kind() const;
  EdgeKey key() const { return EdgeKey{up, down}; }
  bool operator==(const LozengePlacement&) const = default;
};

std::optional<LozengePlacement> lozenge_between(const TriangleCell& a, const TriangleCell& b);

std::string to_string(const TriangleCell& cell);

struct CellHash {
  std::size_t operator()(const TriangleCell& c) const noexcept {
    return std::hash<long long>{}((static_cast<long long>(c.layer) << 32) ^
                                  static_cast<unsigned>(c.index));
  }
};

}  // namespace lozenge
