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

#include "lozenge/positions.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "lozenge/error.hpp"

namespace lozenge {

namespace {

void require_strictly_increasing(const std::vector<int>& elems) {
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] < 1) throw InvalidParameters("positions must be positive integers");
    if (i > 0 && elems[i] <= elems[i - 1])
      throw InvalidParameters("positions must be strictly increasing");
  }
}

}  // namespace

PositionSet::PositionSet(std::initializer_list<int> elems) : elems_(elems) {
  require_strictly_increasing(elems_);
}

PositionSet::PositionSet(std::vector<int> elems) : elems_(std::move(elems)) {
  require_strictly_increasing(elems_);
}

PositionSet PositionSet::from_unsorted(std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return PositionSet(std::move(elems));
}

PositionSet PositionSet::range(int first, int last) {
  std::vector<int> elems;
  for (int p = first; p <= last; ++p) elems.push_back(p);
  return PositionSet(std::move(elems));
}

bool PositionSet::contains(int position) const {
  return std::binary_search(elems_.begin(), elems_.end(), position);
}

bool PositionSet::within(int bound) const { return elems_.empty() || elems_.back() <= bound; }

PositionSet PositionSet::united(const PositionSet& other) const {
  std::vector<int> out;
  std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                 std::back_inserter(out));
  return PositionSet(std::move(out));
}

PositionSet PositionSet::intersected(const PositionSet& other) const {
  std::vector<int> out;
  std::set_intersection(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                        std::back_inserter(out));
  return PositionSet(std::move(out));
}

PositionSet PositionSet::without(const PositionSet& other) const {
  std::vector<int> out;
  std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                      std::back_inserter(out));
  return PositionSet(std::move(out));
}

PositionSet PositionSet::with(int position) const { return united(PositionSet{position}); }

PositionSet PositionSet::complement(int bound) const {
  std::vector<int> out;
  for (int p = 1; p <= bound; ++p)
    if (!contains(p)) out.push_back(p);
  return PositionSet(std::move(out));
}

PositionSet PositionSet::reflected(int offset) const {
  std::vector<int> out;
  out.reserve(elems_.size());
  for (int p : elems_) out.push_back(offset - p);
  return from_unsorted(std::move(out));
}

PositionSet PositionSet::shifted(int delta) const {
  std::vector<int> out;
  out.reserve(elems_.size());
  for (int p : elems_) out.push_back(p + delta);
  return PositionSet(std::move(out));
}

std::string to_string(const PositionSet& set) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < set.size(); ++i) os << (i ? "," : "") << set[i];
  os << '}';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PositionSet& set) { return os << to_string(set); }

}  // namespace lozenge
