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

#include <sstream>

#include "lozenge/spec_io.hpp"

namespace lozenge {
namespace {

TEST(SpecIo, ParsesEveryFamily) {
  EXPECT_EQ(parse_region_spec(R"({"family":"Hex","a":1,"b":2,"c":3})"), RegionSpec::hex(1, 2, 3));
  EXPECT_EQ(parse_region_spec(R"({"family":"H","x":4,"y":3,"U":[2,4,5,8,11],"D":[4,9,11,12],"B":[6,13]})"),
            RegionSpec::dented(Family::H, 4, 3, {2, 4, 5, 8, 11}, {4, 9, 11, 12}, {6, 13}));
  EXPECT_EQ(parse_region_spec(R"({"family":"Wbar","x":1,"y":0,"U":[1],"D":[2]})"),
            RegionSpec::dented(Family::Wbar, 1, 0, {1}, {2}));
  EXPECT_EQ(parse_region_spec(R"({"family":"Lbar","m":3,"n":2,"dents":[1,3]})"),
            RegionSpec::quartered(Family::Lbar, 3, 2, {1, 3}));
  EXPECT_EQ(parse_region_spec(R"({"family":"DentedSemihex","a":2,"b":1,"dents":[1,3]})"),
            RegionSpec::semihex(2, 1, {1, 3}));
  EXPECT_EQ(parse_region_spec(R"({"family":"Pprime","a":1,"b":2,"c":2})"), RegionSpec::cut_hex(Family::Pprime, 1, 2, 2));
}

TEST(SpecIo, RoundTrip) {
  const RegionSpec specs[] = {RegionSpec::hex(2, 0, 1), RegionSpec::dented(Family::RS, 2, 1, {1}, {2}, {3}),
                              RegionSpec::quartered(Family::L, 4, 3, {1, 3}), RegionSpec::semihex(1, 1, {2})};
  for (const auto& s : specs) EXPECT_EQ(parse_region_spec(to_json(s)), s) << to_json(s);
  EXPECT_EQ(to_json(RegionSpec::dented(Family::F, 1, 0, {1}, {}, {})),
            R"({"family":"F","x":1,"y":0,"U":[1],"D":[],"B":[]})");
  const ShuffleCase c{{RatioFamily::RSEven, {1}, {2}, {2}, {1}, 0}, 2, {3}};
  EXPECT_EQ(parse_shuffle_case(to_json(c)), c);
}

TEST(SpecIo, StrictParsing) {
  EXPECT_THROW(parse_region_spec(R"({"family":"Hex","a":1,"b":2,"c":3,"d":4})"), SpecParseError);
  EXPECT_THROW(parse_region_spec(R"({"family":"Hex","a":1,"b":2})"), SpecParseError);
  EXPECT_THROW(parse_region_spec(R"({"family":"Hex","a":1.5,"b":2,"c":1})"), SpecParseError);
  EXPECT_THROW(parse_region_spec(R"({"family":"Hex","a":-1,"b":2,"c":1})"), SpecParseError);
  EXPECT_THROW(parse_region_spec(R"({"family":"Hexagon","a":1,"b":2,"c":1})"), SpecParseError);
  EXPECT_THROW(parse_region_spec(R"({"family":"F","x":1,"y":1,"U":[2,1],"D":[]})"), SpecParseError);
  EXPECT_THROW(parse_region_spec(R"({"family":"F","x":1,"y":1,"U":[0],"D":[]})"), SpecParseError);
  EXPECT_THROW(parse_region_spec(R"({"family":"F","x":1,"y":1,"U":[1]})"), SpecParseError);
  EXPECT_THROW(parse_region_spec(R"([1,2])"), SpecParseError);
  EXPECT_THROW(parse_region_spec("{"), SpecParseError);
  EXPECT_THROW(parse_shuffle_case(R"({"family":"Q","x":1,"y":1,"U":[],"D":[],"Uprime":[],"Dprime":[]})"),
               SpecParseError);
}

TEST(SpecIo, JsonLinesReportTheLine) {
  std::istringstream in("# comment\n{\"family\":\"Hex\",\"a\":1,\"b\":1,\"c\":1}\n\n{\"family\":\"Hex\",\"a\":1}\n");
  try {
    read_region_specs(in, "specs.jsonl");
    FAIL() << "expected a parse error";
  } catch (const SpecParseError& e) {
    EXPECT_EQ(e.line(), 4);
    EXPECT_NE(std::string(e.what()).find("specs.jsonl:4: missing field \"b\""), std::string::npos) << e.what();
  }
}

TEST(SpecIo, ReadsLinesAndPrettyDocuments) {
  std::istringstream lines("{\"family\":\"Hex\",\"a\":1,\"b\":1,\"c\":1}\n{\"family\":\"Hex\",\"a\":2,\"b\":1,\"c\":1}\n");
  EXPECT_EQ(read_region_specs(lines).size(), 2u);
  std::istringstream pretty("{\n  \"family\": \"Hex\",\n  \"a\": 1,\n  \"b\": 1,\n  \"c\": 1\n}\n");
  const auto one = read_region_specs(pretty);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], RegionSpec::hex(1, 1, 1));
}

}  // namespace
}  // namespace lozenge
