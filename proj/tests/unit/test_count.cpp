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

#include <gtest/gtest.h>

#include "lozenge/count.hpp"
#include "lozenge/error.hpp"
#include "lozenge/formulas.hpp"
#include "lozenge/regions.hpp"

namespace lozenge {
namespace {

ExactRational count(const RegionSpec& spec) { return count_tilings(build_region(spec)); }

// Frozen counts; each agrees with the recursive oracle and, where one exists,
// with a closed form evaluated by hand.
TEST(Count, FrozenValues) {
  EXPECT_EQ(count(RegionSpec::hex(2, 2, 2)), 20);
  EXPECT_EQ(count(RegionSpec::hex(3, 3, 3)), 980);
  EXPECT_EQ(count(RegionSpec::hex(4, 4, 4)), 232848);
  EXPECT_EQ(count(RegionSpec::semihex(2, 2, {1, 3})), 2);
  EXPECT_EQ(count(RegionSpec::semihex(3, 3, {2, 4, 5})), 3);
  EXPECT_EQ(count(RegionSpec::quartered(Family::L, 4, 3, {1, 3})), 4);
  EXPECT_EQ(count(RegionSpec::quartered(Family::L, 3, 3, {2, 4})), 5);
  EXPECT_EQ(count(RegionSpec::quartered(Family::Lbar, 4, 3, {1, 3})), fraction(5, 4));
  EXPECT_EQ(count(RegionSpec::quartered(Family::Lbar, 3, 3, {2, 4})), 4);
  EXPECT_EQ(count(RegionSpec::cut_hex(Family::P, 1, 2, 2)), 6);
  EXPECT_EQ(count(RegionSpec::cut_hex(Family::Pprime, 1, 2, 2)), fraction(9, 2));
  EXPECT_EQ(count(RegionSpec::cut_hex(Family::Pprime, 2, 2, 1)), fraction(5, 2));
  EXPECT_EQ(count(RegionSpec::dented(Family::H, 2, 1, {2}, {3}, {1})), 8);
  EXPECT_EQ(count(RegionSpec::dented(Family::F, 1, 1, {2}, {3})), 228);
  EXPECT_EQ(count(RegionSpec::dented(Family::Fbar, 1, 1, {2}, {3})), 18);
  EXPECT_EQ(count(RegionSpec::dented(Family::W, 1, 1, {2}, {3})), fraction(615, 8));
  EXPECT_EQ(count(RegionSpec::dented(Family::Wbar, 1, 1, {2}, {3}, {1})), 10);
  EXPECT_EQ(count(RegionSpec::dented(Family::RS, 2, 1, {1}, {2})), 504);
}

TEST(Count, EmptyAndUnbalanced) {
  EXPECT_EQ(count_tilings(Region{}), 1);
  EXPECT_EQ(count_tilings(Region(std::vector<TriangleCell>{cell_at(0, 0)})), 0);
  EXPECT_EQ(count_tilings_oracle(Region(std::vector<TriangleCell>{cell_at(0, 0)})), 0);
}

TEST(Count, BarriersExcludeLozenges) {
  // Hex(1,1,1) has two tilings, one of which uses the vertical lozenge in the middle.
  const Region hex = build_region(RegionSpec::hex(1, 1, 1));
  const DualGraph g = dual_graph(hex);
  int vertical = 0;
  for (const auto& e : g.edges) {
    if (e.kind() != LozengeKind::Vertical) continue;
    ++vertical;
    EXPECT_EQ(count_tilings(hex.with_barrier(e.key())), 1);
  }
  EXPECT_EQ(vertical, 2);
}

TEST(Count, WeightsMultiply) {
  const Region hex = build_region(RegionSpec::hex(1, 1, 1));
  const auto edge = dual_graph(hex).edges.front().key();
  const Region w = hex.with_weight(edge, fraction(2, 3));
  EXPECT_EQ(count_tilings(w), fraction(5, 3));
  EXPECT_EQ(count_tilings_oracle(w), fraction(5, 3));
  EXPECT_EQ(count_unweighted(w), 2);
}

TEST(Count, DualGraphIsBipartite) {
  const Region r = build_region(RegionSpec::dented(Family::W, 1, 1, {2}, {3}));
  const DualGraph g = dual_graph(r);
  EXPECT_EQ(g.vertices.size(), r.size());
  for (const auto& e : g.edges) {
    EXPECT_EQ(e.up.orientation, Orientation::Up);
    EXPECT_EQ(e.down.orientation, Orientation::Down);
    EXPECT_EQ(e.weight, r.weight(e.key()));
  }
}

TEST(Count, OracleCap) {
  EXPECT_THROW(count_tilings_oracle(build_region(RegionSpec::hex(3, 3, 4))), CapExceeded);  // 66 cells
  EXPECT_EQ(count_tilings_oracle(build_region(RegionSpec::hex(3, 3, 3)), 100), 980);
}

TEST(Count, EnumerationIsDeterministicAndComplete) {
  const Region r = build_region(RegionSpec::hex(2, 2, 2));
  const auto a = enumerate_tilings(r, 100);
  const auto b = enumerate_tilings(r, 100);
  ASSERT_EQ(a.size(), 20u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].placements, b[i].placements);
    EXPECT_EQ(a[i].placements.size(), r.size() / 2);
  }
  EXPECT_NE(a[0].placements, a[1].placements);
  EXPECT_THROW(enumerate_tilings(r, 19), CapExceeded);
}

TEST(Count, EnumeratedWeightsSumToCount) {
  const Region r = build_region(RegionSpec::quartered(Family::Lbar, 4, 3, {1, 3}));
  ExactRational total = 0;
  for (const auto& t : enumerate_tilings(r, 1000)) total += t.weight();
  EXPECT_EQ(total, fraction(5, 4));
}

TEST(Count, ReflectiveMethodsAgree) {
  const RegionSpec specs[] = {
      RegionSpec::dented(Family::RS, 2, 1, {1}, {2}),
      RegionSpec::dented(Family::RS, 4, 0, {}, {1, 2, 3}),
      RegionSpec::dented(Family::RS, 2, 2, {1}, {}, {2}),
  };
  const ExactRational expected[] = {6, 14, 3};
  for (std::size_t i = 0; i < std::size(specs); ++i) {
    EXPECT_EQ(count_reflective(specs[i], ReflectiveMethod::Reduce), expected[i]) << describe(specs[i]);
    EXPECT_EQ(count_reflective(specs[i], ReflectiveMethod::Filter), expected[i]) << describe(specs[i]);
  }
  EXPECT_THROW(count_reflective(RegionSpec::dented(Family::RS, 2, 0, {1, 2, 4}, {1, 2, 4}), ReflectiveMethod::Filter),
               CapExceeded);
  EXPECT_THROW(count_reflective(RegionSpec::hex(1, 1, 1), ReflectiveMethod::Reduce), InvalidParameters);
}

TEST(Count, KuoIdentity) {
  const RegionSpec spec = RegionSpec::dented(Family::F, 2, 1, {2}, {3}, {1});
  const auto [alpha, beta] = extreme_free_positions(spec);
  EXPECT_EQ(alpha, 4);
  EXPECT_EQ(beta, 5);
  const KuoCounts k = kuo_counts(spec, alpha, beta);
  EXPECT_TRUE(k.holds()) << to_string(k.lhs()) << " vs " << to_string(k.rhs());
  EXPECT_EQ(k.whole, count(spec));
  EXPECT_THROW(kuo_counts(spec, 5, 4), InvalidParameters);
  EXPECT_THROW(kuo_counts(RegionSpec::hex(1, 1, 1), 1, 2), InvalidParameters);
}

}  // namespace
}  // namespace lozenge
