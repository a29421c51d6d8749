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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lozenge/region_spec.hpp"
#include "lozenge/verify.hpp"

namespace lozenge {

// Malformed spec text. `line()` is 1-based within the parsed input, 0 when
// the error is not tied to a line.
class SpecParseError : public std::runtime_error {
 public:
  SpecParseError(const std::string& source, int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// Region spec records are JSON objects keyed by "family":
//   Hex, P, Pprime       {"a", "b", "c"}
//   DentedSemihex        {"a", "b", "dents"}
//   H, RS, F, Fbar, W, Wbar  {"x", "y", "U", "D", "B"?}
//   L, Lbar              {"m", "n", "dents"}
// Unknown keys, missing keys and wrong types are rejected. Position lists must
// be strictly increasing. Parsing checks the shape of the record only; family
// invariants are left to validate().
RegionSpec parse_region_spec(std::string_view json_text);
std::string to_json(const RegionSpec& spec);

// Shuffle cases: {"family": ratio family name, "x", "y", "U", "D", "Uprime",
// "Dprime", "B"?}.
ShuffleCase parse_shuffle_case(std::string_view json_text);
std::string to_json(const ShuffleCase& c);

// JSON Lines: one record per line; blank lines and lines starting with '#'
// are skipped. A single pretty-printed object spanning the whole input is
// also accepted. Errors carry the source name and line number.
std::vector<RegionSpec> read_region_specs(std::istream& in, const std::string& source = "<input>");
std::vector<ShuffleCase> read_shuffle_cases(std::istream& in, const std::string& source = "<input>");

}  // namespace lozenge
