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

#include "lozenge/region_spec.hpp"

#include <array>
#include <sstream>
#include <utility>

#include "lozenge/error.hpp"

namespace lozenge {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 12> kFamilyNames{{
    {Family::Hex, "Hex"},
    {Family::DentedSemihex, "DentedSemihex"},
    {Family::H, "H"},
    {Family::RS, "RS"},
    {Family::F, "F"},
    {Family::Fbar, "Fbar"},
    {Family::W, "W"},
    {Family::Wbar, "Wbar"},
    {Family::L, "L"},
    {Family::Lbar, "Lbar"},
    {Family::P, "P"},
    {Family::Pprime, "Pprime"},
}};

}  // namespace

std::string_view family_name(Family family) {
  for (const auto& [f, name] : kFamilyNames)
    if (f == family) return name;
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [f, n] : kFamilyNames)
    if (n == name) return f;
  return std::nullopt;
}

bool is_dented_family(Family family) {
  switch (family) {
    case Family::H:
    case Family::RS:
    case Family::F:
    case Family::Fbar:
    case Family::W:
    case Family::Wbar:
      return true;
    default:
      return false;
  }
}

bool is_halved_family(Family family) {
  return family == Family::F || family == Family::Fbar || family == Family::W ||
         family == Family::Wbar;
}

bool is_quartered_family(Family family) { return family == Family::L || family == Family::Lbar; }

RegionSpec RegionSpec::hex(int a, int b, int c) { return {Family::Hex, HexParams{a, b, c}}; }

RegionSpec RegionSpec::semihex(int a, int b, PositionSet dents) {
  return {Family::DentedSemihex, SemihexParams{a, b, std::move(dents)}};
}

RegionSpec RegionSpec::dented(Family family, int x, int y, PositionSet up, PositionSet down,
                              PositionSet barriers) {
  if (!is_dented_family(family))
    throw InvalidParameters(std::string(family_name(family)) + " does not take (x,y;U;D;B)");
  return {family, DentedParams{x, y, std::move(up), std::move(down), std::move(barriers)}};
}

RegionSpec RegionSpec::quartered(Family family, int m, int n, PositionSet dents) {
  if (!is_quartered_family(family))
    throw InvalidParameters(std::string(family_name(family)) + " does not take (m,n;dents)");
  return {family, QuarteredParams{m, n, std::move(dents)}};
}

RegionSpec RegionSpec::cut_hex(Family family, int a, int b, int c) {
  if (family != Family::P && family != Family::Pprime)
    throw InvalidParameters(std::string(family_name(family)) + " is not a cut hexagon family");
  return {family, HexParams{a, b, c}};
}

const HexParams& RegionSpec::hex_params() const { return std::get<HexParams>(params); }
const SemihexParams& RegionSpec::semihex_params() const { return std::get<SemihexParams>(params); }
const DentedParams& RegionSpec::dented_params() const { return std::get<DentedParams>(params); }
const QuarteredParams& RegionSpec::quartered_params() const {
  return std::get<QuarteredParams>(params);
}

std::string describe(const RegionSpec& spec) {
  std::ostringstream os;
  os << family_name(spec.family) << '(';
  std::visit(
      [&os](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, HexParams>) {
          os << p.a << ',' << p.b << ',' << p.c;
        } else if constexpr (std::is_same_v<T, SemihexParams>) {
          os << p.a << ',' << p.b << ';' << to_string(p.dents);
        } else if constexpr (std::is_same_v<T, DentedParams>) {
          os << p.x << ',' << p.y << ';' << to_string(p.up) << ';' << to_string(p.down) << ';'
             << to_string(p.barriers);
        } else {
          os << p.m << ',' << p.n << ';' << to_string(p.dents);
        }
      },
      spec.params);
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RegionSpec& spec) { return os << describe(spec); }

}  // namespace lozenge
