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

#include "lozenge/spec_io.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "lozenge/error.hpp"

namespace lozenge {

namespace {

using Json = nlohmann::ordered_json;

// Thrown inside a record; the reader adds source and line.
struct RecordError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void only_keys(const Json& j, std::initializer_list<std::string_view> required,
               std::initializer_list<std::string_view> optional = {}) {
  if (!j.is_object()) throw RecordError("expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    const bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                       std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) throw RecordError("unknown field \"" + key + "\"");
  }
  for (auto key : required)
    if (!j.contains(std::string(key))) throw RecordError("missing field \"" + std::string(key) + "\"");
}

int get_int(const Json& j, const std::string& key) {
  const Json& v = j.at(key);
  if (!v.is_number_integer()) throw RecordError("field \"" + key + "\" must be an integer");
  const auto value = v.get<long long>();
  if (value < 0 || value > 1'000'000) throw RecordError("field \"" + key + "\" out of range");
  return static_cast<int>(value);
}

PositionSet get_positions(const Json& j, const std::string& key) {
  if (!j.contains(key)) return {};
  const Json& v = j.at(key);
  if (!v.is_array()) throw RecordError("field \"" + key + "\" must be an array of positions");
  std::vector<int> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) throw RecordError("field \"" + key + "\" must hold integers");
    const auto p = e.get<long long>();
    if (p < 1 || p > 1'000'000) throw RecordError("field \"" + key + "\": positions start at 1");
    if (!out.empty() && p <= out.back())
      throw RecordError("field \"" + key + "\" must be strictly increasing");
    out.push_back(static_cast<int>(p));
  }
  return PositionSet(std::move(out));
}

Json positions_json(const PositionSet& s) { return Json(s.elems()); }

std::string family_field(const Json& j) {
  if (!j.is_object()) throw RecordError("expected a JSON object");
  if (!j.contains("family")) throw RecordError("missing field \"family\"");
  if (!j.at("family").is_string()) throw RecordError("field \"family\" must be a string");
  return j.at("family").get<std::string>();
}

RegionSpec region_from(const Json& j) {
  const std::string name = family_field(j);
  const auto family = parse_family(name);
  if (!family) throw RecordError("unknown family \"" + name + "\"");
  switch (*family) {
    case Family::Hex:
      only_keys(j, {"family", "a", "b", "c"});
      return RegionSpec::hex(get_int(j, "a"), get_int(j, "b"), get_int(j, "c"));
    case Family::P:
    case Family::Pprime:
      only_keys(j, {"family", "a", "b", "c"});
      return RegionSpec::cut_hex(*family, get_int(j, "a"), get_int(j, "b"), get_int(j, "c"));
    case Family::DentedSemihex:
      only_keys(j, {"family", "a", "b", "dents"});
      return RegionSpec::semihex(get_int(j, "a"), get_int(j, "b"), get_positions(j, "dents"));
    case Family::L:
    case Family::Lbar:
      only_keys(j, {"family", "m", "n", "dents"});
      return RegionSpec::quartered(*family, get_int(j, "m"), get_int(j, "n"), get_positions(j, "dents"));
    default:
      only_keys(j, {"family", "x", "y", "U", "D"}, {"B"});
      return RegionSpec::dented(*family, get_int(j, "x"), get_int(j, "y"), get_positions(j, "U"),
                                get_positions(j, "D"), get_positions(j, "B"));
  }
}

ShuffleCase shuffle_from(const Json& j) {
  const std::string name = family_field(j);
  const auto family = parse_ratio_family(name);
  if (!family) throw RecordError("unknown ratio family \"" + name + "\"");
  only_keys(j, {"family", "x", "y", "U", "D", "Uprime", "Dprime"}, {"B"});
  ShuffleCase c;
  c.ratio = RatioSpec{*family,
                      get_positions(j, "U"),
                      get_positions(j, "D"),
                      get_positions(j, "Uprime"),
                      get_positions(j, "Dprime"),
                      get_int(j, "y")};
  c.x = get_int(j, "x");
  c.barriers = get_positions(j, "B");
  return c;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw RecordError(std::string("invalid JSON: ") + e.what());
  }
}

template <class T, class Convert>
std::vector<T> read_records(std::istream& in, const std::string& source, Convert convert) {
  std::ostringstream whole;
  whole << in.rdbuf();
  const std::string text = whole.str();

  // Whole input as one (possibly multi-line) object first.
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{' && text.find('\n', first) != std::string::npos) {
    try {
      const Json j = Json::parse(text);
      try {
        return {convert(j)};
      } catch (const RecordError& e) {
        throw SpecParseError(source, 1, e.what());
      } catch (const std::exception& e) {
        throw SpecParseError(source, 1, e.what());
      }
    } catch (const Json::parse_error&) {
      // not a single document; fall through to JSON Lines
    }
  }

  std::vector<T> out;
  std::istringstream lines(text);
  std::string line;
  int number = 0;
  while (std::getline(lines, line)) {
    ++number;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    try {
      out.push_back(convert(parse_json(line)));
    } catch (const RecordError& e) {
      throw SpecParseError(source, number, e.what());
    } catch (const std::exception& e) {
      throw SpecParseError(source, number, e.what());
    }
  }
  return out;
}

}  // namespace

SpecParseError::SpecParseError(const std::string& source, int line, const std::string& what)
    : std::runtime_error(line > 0 ? source + ":" + std::to_string(line) + ": " + what : source + ": " + what),
      line_(line) {}

RegionSpec parse_region_spec(std::string_view json_text) {
  try {
    return region_from(parse_json(json_text));
  } catch (const RecordError& e) {
    throw SpecParseError("<spec>", 0, e.what());
  }
}

ShuffleCase parse_shuffle_case(std::string_view json_text) {
  try {
    return shuffle_from(parse_json(json_text));
  } catch (const RecordError& e) {
    throw SpecParseError("<case>", 0, e.what());
  }
}

std::string to_json(const RegionSpec& spec) {
  Json j;
  j["family"] = std::string(family_name(spec.family));
  std::visit(
      [&j](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, HexParams>) {
          j["a"] = p.a;
          j["b"] = p.b;
          j["c"] = p.c;
        } else if constexpr (std::is_same_v<T, SemihexParams>) {
          j["a"] = p.a;
          j["b"] = p.b;
          j["dents"] = positions_json(p.dents);
        } else if constexpr (std::is_same_v<T, DentedParams>) {
          j["x"] = p.x;
          j["y"] = p.y;
          j["U"] = positions_json(p.up);
          j["D"] = positions_json(p.down);
          j["B"] = positions_json(p.barriers);
        } else {
          j["m"] = p.m;
          j["n"] = p.n;
          j["dents"] = positions_json(p.dents);
        }
      },
      spec.params);
  return j.dump();
}

std::string to_json(const ShuffleCase& c) {
  Json j;
  j["family"] = std::string(ratio_family_name(c.ratio.family));
  j["x"] = c.x;
  j["y"] = c.ratio.y;
  j["U"] = positions_json(c.ratio.up);
  j["D"] = positions_json(c.ratio.down);
  j["Uprime"] = positions_json(c.ratio.up_shuffled);
  j["Dprime"] = positions_json(c.ratio.down_shuffled);
  j["B"] = positions_json(c.barriers);
  return j.dump();
}

std::vector<RegionSpec> read_region_specs(std::istream& in, const std::string& source) {
  return read_records<RegionSpec>(in, source, region_from);
}

std::vector<ShuffleCase> read_shuffle_cases(std::istream& in, const std::string& source) {
  return read_records<ShuffleCase>(in, source, shuffle_from);
}

}  // namespace lozenge
