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

#include <algorithm>

#include "lozenge/regions.hpp"
#include "lozenge/render.hpp"

namespace lozenge {
namespace {

TEST(Render, AsciiHexagon) {
  const Region r = build_region(RegionSpec::hex(1, 1, 1));
  EXPECT_EQ(render_ascii(r), "Hex(1,1,1): 6 cells\n^v^\nv^v\n");
}

TEST(Render, AsciiMarksDentsBarriersAndWeights) {
  const std::string s = render_ascii(build_region(RegionSpec::dented(Family::Wbar, 1, 1, {2}, {3}, {1})));
  EXPECT_EQ(s.rfind("Wbar(1,1;{2};{3};{1}): 34 cells\n", 0), 0u);
  const std::string body = s.substr(s.find('\n') + 1);
  EXPECT_EQ(std::count(body.begin(), body.end(), '#'), 2);
  EXPECT_EQ(std::count(body.begin(), body.end(), '='), 1);
  EXPECT_EQ(std::count(body.begin(), body.end(), ':'), 2);
}

TEST(Render, AsciiTilingPairsCells) {
  const Region r = build_region(RegionSpec::hex(1, 1, 1));
  const auto tilings = enumerate_tilings(r, 10);
  const std::string s = render_ascii(r, &tilings.at(0));
  EXPECT_EQ(s.rfind("Hex(1,1,1): 6 cells, tiling weight 1\n", 0), 0u);
  const std::string body = s.substr(s.find('\n') + 1);
  for (char c : {'a', 'b', 'c'}) EXPECT_EQ(std::count(body.begin(), body.end(), c), 2) << c;
}

TEST(Render, SvgIsDeterministicAndComplete) {
  const Region r = build_region(RegionSpec::dented(Family::W, 1, 1, {2}, {3}, {1}));
  const std::string a = render_svg(r);
  EXPECT_EQ(a, render_svg(build_region(RegionSpec::dented(Family::W, 1, 1, {2}, {3}, {1}))));
  EXPECT_NE(a.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\""), std::string::npos);
  EXPECT_NE(a.find("<title>W(1,1;{2};{3};{1}): " + std::to_string(r.size()) + " cells</title>"), std::string::npos);
  auto count_in_group = [&](const std::string& id, const std::string& tag) {
    const auto start = a.find("<g id=\"" + id + "\"");
    const auto end = a.find("</g>", start);
    std::size_t n = 0;
    for (auto p = a.find(tag, start); p < end; p = a.find(tag, p + 1)) ++n;
    return n;
  };
  EXPECT_EQ(count_in_group("cells", "<polygon"), r.size());
  EXPECT_EQ(count_in_group("dents", "<polygon"), r.dents().size());
  EXPECT_EQ(count_in_group("barriers", "<line"), 1u);
  EXPECT_EQ(count_in_group("weights", "<polygon"), r.weight_overrides().size());
}

TEST(Render, SvgTiling) {
  const Region r = build_region(RegionSpec::quartered(Family::Lbar, 4, 3, {1, 3}));
  const auto tilings = enumerate_tilings(r, 100);
  const std::string s = render_svg(r, &tilings.back());
  EXPECT_NE(s.find("<g id=\"tiling\""), std::string::npos);
  EXPECT_NE(s.find("tiling weight"), std::string::npos);
}

}  // namespace
}  // namespace lozenge
