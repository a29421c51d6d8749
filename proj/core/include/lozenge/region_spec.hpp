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

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "lozenge/positions.hpp"

namespace lozenge {

enum class Family {
  Hex,            // hexagon, sides a,b,c,a,b,c clockwise from north
  DentedSemihex,  // upper half of a hexagon with a dents on its base
  H,              // doubly-dented hexagon with barriers
  RS,             // symmetric doubly-dented hexagon (left-half index sets)
  F,              // halved hexagon, zigzag west side
  Fbar,           // halved hexagon, odd-height halves
  W,              // F with weight-1/2 vertical lozenges on the west side
  Wbar,           // Fbar with the same weighting
  L,              // quartered hexagon
  Lbar,           // quartered hexagon with weighted west side
  P,              // hexagon with a maximal staircase cut off its west corner
  Pprime,         // P with weight-1/2 vertical lozenges along the cut
};

std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);

struct HexParams {
  int a = 0;
  int b = 0;
  int c = 0;
  bool operator==(const HexParams&) const = default;
};

struct SemihexParams {
  int a = 0;
  int b = 0;
  PositionSet dents;
  bool operator==(const SemihexParams&) const = default;
};

// Shared by H, RS, F, Fbar, W, Wbar.
struct DentedParams {
  int x = 0;
  int y = 0;
  PositionSet up;
  PositionSet down;
  PositionSet barriers;
  bool operator==(const DentedParams&) const = default;

  // n = |U u D|.
  int dent_count() const { return static_cast<int>(up.united(down).size()); }
};

struct QuarteredParams {
  int m = 0;
  int n = 0;
  PositionSet dents;
  bool operator==(const QuarteredParams&) const = default;
};

// Serializable description of one region family with its parameters.
struct RegionSpec {
  Family family = Family::Hex;
  std::variant<HexParams, SemihexParams, DentedParams, QuarteredParams> params;

  static RegionSpec hex(int a, int b, int c);
  static RegionSpec semihex(int a, int b, PositionSet dents);
  static RegionSpec dented(Family family, int x, int y, PositionSet up, PositionSet down,
                           PositionSet barriers = {});
  static RegionSpec quartered(Family family, int m, int n, PositionSet dents);
  static RegionSpec cut_hex(Family family, int a, int b, int c);

  const HexParams& hex_params() const;
  const SemihexParams& semihex_params() const;
  const DentedParams& dented_params() const;
  const QuarteredParams& quartered_params() const;

  bool operator==(const RegionSpec&) const = default;
};

bool is_dented_family(Family family);     // H, RS, F, Fbar, W, Wbar
bool is_halved_family(Family family);     // F, Fbar, W, Wbar
bool is_quartered_family(Family family);  // L, Lbar

// Compact human-readable form, e.g. "F(2,1;{1};{2};{})".
std::string describe(const RegionSpec& spec);
std::ostream& operator<<(std::ostream& os, const RegionSpec& spec);

}  // namespace lozenge
