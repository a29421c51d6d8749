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

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace lozenge {

// Strictly increasing list of positive integers: positions of dents and
// barriers along the horizontal axis, 1-based from the left.
class PositionSet {
 public:
  PositionSet() = default;
  PositionSet(std::initializer_list<int> elems);
  explicit PositionSet(std::vector<int> elems);

  // Sorts and deduplicates instead of rejecting; still rejects values < 1.
  static PositionSet from_unsorted(std::vector<int> elems);
  // {first, first+1, ..., last}; empty when last < first.
  static PositionSet range(int first, int last);

  const std::vector<int>& elems() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  int operator[](std::size_t i) const { return elems_[i]; }
  int front() const { return elems_.front(); }
  int back() const { return elems_.back(); }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool contains(int position) const;
  // True when every element lies in [1, bound].
  bool within(int bound) const;

  PositionSet united(const PositionSet& other) const;
  PositionSet intersected(const PositionSet& other) const;
  PositionSet without(const PositionSet& other) const;
  PositionSet with(int position) const;
  // [1, bound] minus this set.
  PositionSet complement(int bound) const;
  // {offset - p : p in this set}; used for mirrored index sets.
  PositionSet reflected(int offset) const;
  PositionSet shifted(int delta) const;

  bool operator==(const PositionSet&) const = default;
  auto operator<=>(const PositionSet&) const = default;

 private:
  std::vector<int> elems_;
};

std::string to_string(const PositionSet& set);
std::ostream& operator<<(std::ostream& os, const PositionSet& set);

}  // namespace lozenge
