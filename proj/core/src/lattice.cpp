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

#include "lozenge/lattice.hpp"

#include <algorithm>

namespace lozenge {

bool well_formed(const TriangleCell& cell) {
  return cell.layer >= 0 && cell.index >= 0 &&
         cell.orientation == orientation_at(cell.layer, cell.index);
}

std::vector<TriangleCell> neighbors(const TriangleCell& cell) {
  std::vector<TriangleCell> out;
  out.reserve(3);
  if (cell.index >= 1) out.push_back(cell_at(cell.layer, cell.index - 1));
  out.push_back(cell_at(cell.layer, cell.index + 1));
  if (cell.orientation == Orientation::Up) {
    out.push_back(cell_at(cell.layer + 1, cell.index));
  } else if (cell.layer >= 1) {
    out.push_back(cell_at(cell.layer - 1, cell.index));
  }
  return out;
}

bool adjacent(const TriangleCell& a, const TriangleCell& b) {
  const auto ns = neighbors(a);
  return std::find(ns.begin(), ns.end(), b) != ns.end();
}

std::optional<EdgeKey> edge_key(const TriangleCell& a, const TriangleCell& b) {
  if (a.orientation == b.orientation || !adjacent(a, b)) return std::nullopt;
  if (a.orientation == Orientation::Up) return EdgeKey{a, b};
  return EdgeKey{b, a};
}

LozengeKind LozengePlacement::kind() const {
  if (up.layer != down.layer) return LozengeKind::Vertical;
  return up.index < down.index ? LozengeKind::UpLeft : LozengeKind::DownLeft;
}

std::optional<LozengePlacement> lozenge_between(const TriangleCell& a, const TriangleCell& b) {
  const auto key = edge_key(a, b);
  if (!key) return std::nullopt;
  return LozengePlacement{key->up, key->down, ExactRational(1)};
}

std::string to_string(const TriangleCell& cell) {
  return std::string(cell.orientation == Orientation::Up ? "U" : "D") + "(" +
         std::to_string(cell.layer) + "," + std::to_string(cell.index) + ")";
}

}  // namespace lozenge
