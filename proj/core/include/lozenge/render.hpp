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

#include <string>

#include "lozenge/count.hpp"
#include "lozenge/region.hpp"

namespace lozenge {

// Both renderers are deterministic: the same region and tiling always give
// the same bytes. The first line (ASCII) or the <title> element (SVG) reads
// "<label>: <n> cells", with the region's spec as label when it has one.
//
// ASCII: one text row per layer, column = triangle index. '^' and 'v' are
// the Up and Down cells, '#' a dent. Between layers, '=' marks a barred
// vertical lozenge and ':' a vertical lozenge with weight other than 1. With
// a tiling, each cell shows a letter shared with its partner instead, upper
// case when the lozenge carries a weight other than 1.
std::string render_ascii(const Region& region, const Tiling* tiling = nullptr);

// SVG 1.1 with unit-edge equilateral triangles (scaled). Dents are shaded
// grey, barred edges are bold bars, lozenges with a weight other than 1 get
// a shaded core. With a tiling, lozenges are filled by orientation.
std::string render_svg(const Region& region, const Tiling* tiling = nullptr);

}  // namespace lozenge
