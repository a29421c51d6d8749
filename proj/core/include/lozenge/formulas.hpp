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

#include <string_view>
#include <optional>

#include "lozenge/positions.hpp"
#include "lozenge/rational.hpp"
#include "lozenge/region_spec.hpp"

namespace lozenge {

// n! for n >= 0, memoized. Safe to call concurrently.
BigInt factorial(int n);

// Plane partitions in an a x b x c box; tilings of Hex(a,b,c).
ExactRational pp(int a, int b, int c);

// prod_{i<j} (s_j - s_i)/(j - i); tilings of a dented semihexagon.
ExactRational clp(const PositionSet& s);

// Tilings of P(a,b,c) and weighted tilings of Pprime(a,b,c). Require a <= b.
ExactRational proctor(int a, int b, int c);
ExactRational ciucu(int a, int b, int c);

// Skipping hyperfactorial: h2(2k) = 0! 2! ... (2k-2)!, h2(2k+1) = 1! 3! ... (2k-1)!.
ExactRational h2(int n);

enum class DeltaKind {
  Squares,      // prod_{i<j} (s_j^2 - s_i^2)
  OddShift,     // prod_{i<j} (s_j - s_i)(s_j + s_i - 1)
  EvenShift,    // prod_{i<j} (s_j - s_i)(s_j + s_i - 2)
  WeightedTri,  // prod_{i<j} (s_j - s_i) * prod_{i<=j} (s_i + s_j - 1)
};

ExactRational delta(const PositionSet& s, DeltaKind kind);

enum class QuarteredVariant { LEven, LOdd, LbarEven, LbarOdd };

// Closed forms for quartered hexagons with k = |dents|: LEven / LbarEven have
// m = 2k rows, LOdd / LbarOdd have m = 2k - 1.
ExactRational quartered(QuarteredVariant variant, const PositionSet& dents);

// Dispatches on family (L or Lbar) and the parity of m.
ExactRational quartered_count(Family family, int m, const PositionSet& dents);

enum class RatioFamily { H, RSOdd, RSEven, F, Fbar, W, Wbar };

std::string_view ratio_family_name(RatioFamily family);
std::optional<RatioFamily> parse_ratio_family(std::string_view name);

// One shuffle (U;D) -> (U';D') of a region family.
struct RatioSpec {
  RatioFamily family = RatioFamily::H;
  PositionSet up;
  PositionSet down;
  PositionSet up_shuffled;
  PositionSet down_shuffled;
  int y = 0;

  bool operator==(const RatioSpec&) const = default;
};

// Throws InvalidParameters unless U u D = U' u D', U n D = U' n D' and y >= 0.
void validate(const RatioSpec& rs);

// M(region(U;D)) / M(region(U';D')) as predicted by the shuffling theorem of
// the family. RS positions are measured from the symmetry axis (see
// axis_distance).
ExactRational shuffle_ratio(const RatioSpec& rs);

}  // namespace lozenge
