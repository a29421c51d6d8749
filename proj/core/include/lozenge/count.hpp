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

#include <cstddef>
#include <vector>

#include "lozenge/lattice.hpp"
#include "lozenge/rational.hpp"
#include "lozenge/region.hpp"
#include "lozenge/region_spec.hpp"

namespace lozenge {

inline constexpr std::size_t kOracleCellCap = 60;
inline constexpr std::size_t kDefaultTilingCap = 5000;

struct DualGraph {
  std::vector<TriangleCell> vertices;
  std::vector<LozengePlacement> edges;  // admissible placements, weights inherited
};

struct Tiling {
  std::vector<LozengePlacement> placements;  // sorted by Up cell
  ExactRational weight() const;
};

DualGraph dual_graph(const Region& region);

// Weighted number of lozenge tilings. Sweeps the layers top to bottom keeping
// the set of Down cells of the next layer already covered by vertical
// lozenges. Integer arithmetic throughout: weights are scaled to integers by
// the common denominator, which is divided out at the end.
ExactRational count_tilings(const Region& region);

// Same count, ignoring weights.
BigInt count_unweighted(const Region& region);

// Exhaustive recursive matching. Throws CapExceeded above `cell_cap` cells.
ExactRational count_tilings_oracle(const Region& region, std::size_t cell_cap = kOracleCellCap);

// All tilings, ordered lexicographically by the choice made at the first
// uncovered cell (partners in neighbors() order). Throws CapExceeded when the
// region has more than `cap` tilings.
std::vector<Tiling> enumerate_tilings(const Region& region, std::size_t cap);

enum class ReflectiveMethod { Filter, Reduce };

// Number of tilings of an RS region invariant under the left-right
// reflection. Odd x gives 0.
//   Filter: enumerate every tiling of the full region (at most `cap`) and
//           keep the invariant ones.
//   Reduce: count the halved region from reduce_reflective.
ExactRational count_reflective(const RegionSpec& rs, ReflectiveMethod method,
                               std::size_t cap = kDefaultTilingCap);

// The six counts of the condensation recurrence for a halved hexagon
// G = F_{x,y}(U;D;B) with alpha < beta the extreme free positions:
//   whole * both == beta_up * alpha_low + alpha_up * beta_low.
struct KuoCounts {
  ExactRational whole;      // G
  ExactRational both;       // (x-1, y-1; alpha beta U)
  ExactRational beta_up;    // (x-1, y; beta U)
  ExactRational alpha_low;  // (x, y-1; alpha U)
  ExactRational alpha_up;   // (x-1, y; alpha U)
  ExactRational beta_low;   // (x, y-1; beta U)

  ExactRational lhs() const { return whole * both; }
  ExactRational rhs() const { return beta_up * alpha_low + alpha_up * beta_low; }
  bool holds() const { return lhs() == rhs(); }
};

// First and last positions of [x+y+n] outside U u D u B.
std::pair<int, int> extreme_free_positions(const RegionSpec& spec);

// Throws InvalidParameters unless spec is a halved family, alpha < beta are
// the extreme free positions and every shifted region is valid.
KuoCounts kuo_counts(const RegionSpec& spec, int alpha, int beta);

}  // namespace lozenge
