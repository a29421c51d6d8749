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

#include "lozenge/lattice.hpp"

namespace lozenge {
namespace {

TEST(Lattice, ParityFixesOrientation) {
  EXPECT_EQ(orientation_at(0, 0), Orientation::Up);
  EXPECT_EQ(orientation_at(0, 1), Orientation::Down);
  EXPECT_EQ(orientation_at(1, 0), Orientation::Down);
  EXPECT_EQ(orientation_at(3, 5), Orientation::Up);
  EXPECT_TRUE(well_formed(cell_at(2, 4)));
  EXPECT_FALSE(well_formed(TriangleCell{2, 4, Orientation::Down}));
  EXPECT_FALSE(well_formed(TriangleCell{-1, 1, Orientation::Up}));
}

TEST(Lattice, NeighborsOrderedLeftRightVertical) {
  const auto up = cell_at(2, 4);
  const std::vector<TriangleCell> expected{cell_at(2, 3), cell_at(2, 5), cell_at(3, 4)};
  EXPECT_EQ(neighbors(up), expected);
  const auto down = cell_at(2, 5);
  const std::vector<TriangleCell> expected_down{cell_at(2, 4), cell_at(2, 6), cell_at(1, 5)};
  EXPECT_EQ(neighbors(down), expected_down);
}

TEST(Lattice, NeighborsDropNegativeCoordinates) {
  EXPECT_EQ(neighbors(cell_at(0, 1)).size(), 2u);  // Down on the top layer has no cell above
  EXPECT_EQ(neighbors(cell_at(0, 0)).size(), 2u);  // no left neighbor
}

TEST(Lattice, EdgeKeyNormalizesOrder) {
  const auto a = cell_at(1, 3);  // Up
  const auto b = cell_at(1, 4);  // Down
  ASSERT_TRUE(edge_key(a, b));
  EXPECT_EQ(edge_key(a, b), edge_key(b, a));
  EXPECT_EQ(edge_key(b, a)->up, a);
  EXPECT_FALSE(edge_key(a, cell_at(1, 5)));
  EXPECT_FALSE(edge_key(a, a));
}

TEST(Lattice, LozengeKinds) {
  EXPECT_EQ(lozenge_between(cell_at(0, 2), cell_at(1, 2))->kind(), LozengeKind::Vertical);
  EXPECT_EQ(lozenge_between(cell_at(0, 2), cell_at(0, 3))->kind(), LozengeKind::UpLeft);
  EXPECT_EQ(lozenge_between(cell_at(0, 2), cell_at(0, 1))->kind(), LozengeKind::DownLeft);
  EXPECT_FALSE(lozenge_between(cell_at(0, 2), cell_at(2, 2)));
}

}  // namespace
}  // namespace lozenge
