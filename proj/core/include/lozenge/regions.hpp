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

#include <vector>

#include "lozenge/lattice.hpp"
#include "lozenge/rational.hpp"
#include "lozenge/region.hpp"
#include "lozenge/region_spec.hpp"

namespace lozenge {

// Throws InvalidParameters naming the violated invariant.
void validate(const RegionSpec& spec);

// Number of unit positions on the dent axis: x+y+n for H/F/Fbar/W/Wbar,
// x+y+2n for RS (the full hexagon), a+b for DentedSemihex, n+k for L/Lbar.
int axis_length(const RegionSpec& spec);

// Builds the cell set of one region family from its side lengths.
//
// Every family is traced as a stack of layers between a left and a right
// boundary; each boundary moves half a unit left or right per layer. Dents
// remove the Up triangle above (resp. Down triangle below) a unit segment of
// the dent axis; barriers bar the vertical lozenge across that segment.
Region build_region(const RegionSpec& spec);

// RS(x,y;U;D;B) as the doubly-dented hexagon it abbreviates.
RegionSpec expand_reflective(const RegionSpec& rs);

// Halved hexagon whose tilings are in bijection with the reflectively
// symmetric tilings of an RS region: Fbar(x/2, y/2) for even y and
// F(x/2, (y-1)/2) for odd y, with positions re-measured from the symmetry
// axis. Rejects odd x, a barrier on the axis (both admit no symmetric
// tiling), and y = 0 with no up or no down dents, where the halved region has
// no family form (use halve_symmetric).
RegionSpec reduce_reflective(const RegionSpec& rs);

// Left-half position p of an RS region, measured from the symmetry axis.
int axis_distance(const RegionSpec& rs, int position);

// Reflection across the vertical line through the midpoint of the region's
// top layer. Valid as a symmetry only for left-right symmetric regions.
TriangleCell reflect_horizontally(const TriangleCell& cell, int mirror_sum);
int mirror_sum(const Region& region);

// Left half of a mirror-symmetric region. Symmetric tilings must cover the
// cells on the axis with vertical lozenges; the result holds the cells
// strictly left of the axis, and symmetric tilings of `region` correspond to
// tilings of the result. Marked untileable when the axis cells cannot all be
// covered vertically.
Region halve_symmetric(const Region& region);

struct ForcedReduction {
  Region region;
  ExactRational factor{1};
  std::vector<LozengePlacement> forced;
};

// Repeatedly matches every cell that has exactly one admissible partner.
// count(input) == factor * count(result.region). A cell left with no partner
// marks the result untileable.
ForcedReduction remove_forced_lozenges(const Region& region);

}  // namespace lozenge
