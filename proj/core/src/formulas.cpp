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

#include "lozenge/formulas.hpp"

#include <array>
#include <mutex>
#include <utility>
#include <vector>

#include "lozenge/error.hpp"

namespace lozenge {

namespace {

std::mutex factorial_mutex;
std::vector<BigInt> factorial_table{BigInt(1)};

// 0! 1! ... (n-1)!
ExactRational hyperfactorial(int n) {
  ExactRational out = 1;
  for (int i = 0; i < n; ++i) out *= ExactRational(factorial(i));
  return out;
}

ExactRational delta_pairs(const PositionSet& s, DeltaKind kind) {
  ExactRational out = 1;
  for (std::size_t j = 0; j < s.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const long a = s[i];
      const long b = s[j];
      switch (kind) {
        case DeltaKind::Squares:
          out *= b * b - a * a;
          break;
        case DeltaKind::OddShift:
          out *= (b - a) * (b + a - 1);
          break;
        case DeltaKind::EvenShift:
          out *= (b - a) * (b + a - 2);
          break;
        case DeltaKind::WeightedTri:
          out *= (b - a) * (a + b - 1);
          break;
      }
    }
    if (kind == DeltaKind::WeightedTri) out *= 2L * s[j] - 1;
  }
  return out;
}

constexpr std::array<std::pair<RatioFamily, std::string_view>, 7> kRatioNames{{
    {RatioFamily::H, "H"},
    {RatioFamily::RSOdd, "RS-odd"},
    {RatioFamily::RSEven, "RS-even"},
    {RatioFamily::F, "F"},
    {RatioFamily::Fbar, "Fbar"},
    {RatioFamily::W, "W"},
    {RatioFamily::Wbar, "Wbar"},
}};

}  // namespace

BigInt factorial(int n) {
  if (n < 0) throw InvalidParameters("factorial of a negative number");
  std::lock_guard<std::mutex> lock(factorial_mutex);
  while (static_cast<int>(factorial_table.size()) <= n) {
    const auto k = static_cast<unsigned long>(factorial_table.size());
    factorial_table.push_back(factorial_table.back() * k);
  }
  return factorial_table[n];
}

ExactRational pp(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw InvalidParameters("pp: arguments must be non-negative");
  return hyperfactorial(a) * hyperfactorial(b) * hyperfactorial(c) * hyperfactorial(a + b + c) /
         (hyperfactorial(a + b) * hyperfactorial(b + c) * hyperfactorial(c + a));
}

ExactRational clp(const PositionSet& s) {
  ExactRational out = 1;
  for (std::size_t j = 0; j < s.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) out *= fraction(s[j] - s[i], static_cast<long>(j - i));
  return out;
}

ExactRational proctor(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw InvalidParameters("proctor: arguments must be non-negative");
  if (a > b) throw InvalidParameters("proctor: requires a <= b");
  ExactRational out = 1;
  for (int i = 1; i <= a; ++i) {
    for (int j = 1; j <= b - a + 1; ++j) out *= fraction(c + i + j - 1, i + j - 1);
    for (int j = b - a + 2; j <= b - a + i; ++j) out *= fraction(2 * c + i + j - 1, i + j - 1);
  }
  return out;
}

ExactRational ciucu(int a, int b, int c) {
  ExactRational out = proctor(a, b, c);
  for (int i = 1; i <= a; ++i) out *= fraction(2 * c + b - a + i, c + b - a + i);
  mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<unsigned long>(a));
  return out;
}

ExactRational h2(int n) {
  if (n < 0) throw InvalidParameters("h2: argument must be non-negative");
  ExactRational out = 1;
  for (int i = n % 2 == 0 ? 0 : 1; i <= n - 2; i += 2) out *= ExactRational(factorial(i));
  return out;
}

ExactRational delta(const PositionSet& s, DeltaKind kind) { return delta_pairs(s, kind); }

ExactRational quartered(QuarteredVariant variant, const PositionSet& dents) {
  const int k = static_cast<int>(dents.size());
  switch (variant) {
    case QuarteredVariant::LEven: {
      ExactRational out = delta(dents, DeltaKind::Squares) / h2(2 * k + 1);
      for (int a : dents) out *= a;
      return out;
    }
    case QuarteredVariant::LOdd:
      return delta(dents, DeltaKind::OddShift) / h2(2 * k);
    case QuarteredVariant::LbarEven: {
      ExactRational out = delta(dents, DeltaKind::WeightedTri) / h2(2 * k + 1);
      mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<unsigned long>(k));
      return out;
    }
    case QuarteredVariant::LbarOdd:
      return delta(dents, DeltaKind::EvenShift) / h2(2 * k);
  }
  throw std::logic_error("unhandled quartered variant");
}

ExactRational quartered_count(Family family, int m, const PositionSet& dents) {
  if (!is_quartered_family(family)) throw InvalidParameters("quartered_count expects L or Lbar");
  if (m < 0 || static_cast<int>(dents.size()) != (m + 1) / 2)
    throw InvalidParameters("quartered_count: need floor((m+1)/2) dents");
  const bool even = m % 2 == 0;
  if (family == Family::L) return quartered(even ? QuarteredVariant::LEven : QuarteredVariant::LOdd, dents);
  return quartered(even ? QuarteredVariant::LbarEven : QuarteredVariant::LbarOdd, dents);
}

std::string_view ratio_family_name(RatioFamily family) {
  for (const auto& [f, name] : kRatioNames)
    if (f == family) return name;
  return "?";
}

std::optional<RatioFamily> parse_ratio_family(std::string_view name) {
  for (const auto& [f, n] : kRatioNames)
    if (n == name) return f;
  return std::nullopt;
}

void validate(const RatioSpec& rs) {
  if (rs.y < 0) throw InvalidParameters("ratio: y must be non-negative");
  if (rs.up.united(rs.down) != rs.up_shuffled.united(rs.down_shuffled))
    throw InvalidParameters("ratio: U u D must equal U' u D'");
  if (rs.up.intersected(rs.down) != rs.up_shuffled.intersected(rs.down_shuffled))
    throw InvalidParameters("ratio: U n D must equal U' n D'");
}

ExactRational shuffle_ratio(const RatioSpec& rs) {
  validate(rs);
  const int u = static_cast<int>(rs.up.size());
  const int d = static_cast<int>(rs.down.size());
  const int u2 = static_cast<int>(rs.up_shuffled.size());
  const int d2 = static_cast<int>(rs.down_shuffled.size());
  const int y = rs.y;

  if (rs.family == RatioFamily::H) {
    return clp(rs.up) * clp(rs.down) * pp(u, d, y) /
           (clp(rs.up_shuffled) * clp(rs.down_shuffled) * pp(u2, d2, y));
  }

  DeltaKind kind = DeltaKind::Squares;
  int offset = 0;  // h2 argument is 2|S| + offset
  switch (rs.family) {
    case RatioFamily::RSOdd:
      kind = DeltaKind::Squares;
      offset = y;
      break;
    case RatioFamily::RSEven:
      kind = DeltaKind::OddShift;
      offset = y;
      break;
    case RatioFamily::F:
      kind = DeltaKind::Squares;
      offset = 2 * y + 1;
      break;
    case RatioFamily::Fbar:
      kind = DeltaKind::OddShift;
      offset = 2 * y;
      break;
    case RatioFamily::W:
      kind = DeltaKind::WeightedTri;
      offset = 2 * y + 1;
      break;
    case RatioFamily::Wbar:
      kind = DeltaKind::EvenShift;
      offset = 2 * y;
      break;
    case RatioFamily::H:
      break;
  }
  return delta(rs.up, kind) * delta(rs.down, kind) * h2(2 * u2 + offset) * h2(2 * d2 + offset) /
         (delta(rs.up_shuffled, kind) * delta(rs.down_shuffled, kind) * h2(2 * u + offset) *
          h2(2 * d + offset));
}

}  // namespace lozenge
