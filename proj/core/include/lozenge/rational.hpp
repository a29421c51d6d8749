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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lozenge {

// Every count and weight in the library is an exact rational. GMP keeps
// values canonical (lowest terms, positive denominator) after each operation.
using ExactRational = mpq_class;
using BigInt = mpz_class;

// Lowest-terms text form: "p/q", or just "p" when the denominator is 1.
std::string to_string(const ExactRational& value);

// Accepts "p", "-p" or "p/q". Throws std::invalid_argument on malformed text
// or a zero denominator.
ExactRational parse_rational(std::string_view text);

// p/q in lowest terms; q must be non-zero.
inline ExactRational fraction(long p, long q) {
  ExactRational r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_integer(const ExactRational& value) { return value.get_den() == 1; }

}  // namespace lozenge
