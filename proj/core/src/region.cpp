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

#include "lozenge/region.hpp"

#include <algorithm>

#include "lozenge/error.hpp"

namespace lozenge {

Region::Region(std::vector<TriangleCell> cells, std::map<EdgeKey, ExactRational> weights,
               std::set<EdgeKey> barred)
    : cells_(std::move(cells)), weights_(std::move(weights)), barred_(std::move(barred)) {
  index_cells();
  for (const auto& [edge, w] : weights_) {
    if (w <= 0) throw InvalidParameters("lozenge weights must be positive");
    if (barred_.count(edge)) throw InvalidParameters("an edge cannot be both weighted and barred");
  }
}

void Region::index_cells() {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  up_count_ = 0;
  for (const auto& c : cells_) {
    if (!well_formed(c)) throw InvalidParameters("malformed cell " + to_string(c));
    if (c.orientation == Orientation::Up) ++up_count_;
  }
}

bool Region::contains(const TriangleCell& cell) const {
  return std::binary_search(cells_.begin(), cells_.end(), cell);
}

ExactRational Region::weight(const EdgeKey& edge) const {
  auto it = weights_.find(edge);
  return it == weights_.end() ? ExactRational(1) : it->second;
}

bool Region::admissible(const EdgeKey& edge) const {
  return !barred(edge) && contains(edge.up) && contains(edge.down);
}

Region Region::with_label(RegionSpec spec) const {
  Region out = *this;
  out.label_ = std::move(spec);
  return out;
}

Region Region::with_dents(std::vector<TriangleCell> dents) const {
  Region out = *this;
  std::sort(dents.begin(), dents.end());
  out.dents_ = std::move(dents);
  return out;
}

Region Region::with_barrier(const EdgeKey& edge) const {
  Region out = *this;
  out.weights_.erase(edge);
  out.barred_.insert(edge);
  return out;
}

Region Region::with_weight(const EdgeKey& edge, ExactRational weight) const {
  if (weight <= 0) throw InvalidParameters("lozenge weights must be positive");
  if (barred(edge)) throw InvalidParameters("an edge cannot be both weighted and barred");
  Region out = *this;
  if (weight == 1)
    out.weights_.erase(edge);
  else
    out.weights_[edge] = std::move(weight);
  return out;
}

Region Region::without_cells(const std::vector<TriangleCell>& removed) const {
  std::vector<TriangleCell> sorted_removed = removed;
  std::sort(sorted_removed.begin(), sorted_removed.end());
  auto gone = [&](const TriangleCell& c) {
    return std::binary_search(sorted_removed.begin(), sorted_removed.end(), c);
  };
  Region out;
  for (const auto& c : cells_)
    if (!gone(c)) out.cells_.push_back(c);
  for (const auto& [edge, w] : weights_)
    if (!gone(edge.up) && !gone(edge.down)) out.weights_.emplace(edge, w);
  for (const auto& edge : barred_)
    if (!gone(edge.up) && !gone(edge.down)) out.barred_.insert(edge);
  out.index_cells();
  out.label_ = label_;
  out.dents_ = dents_;
  out.untileable_ = untileable_;
  return out;
}

Region Region::marked_untileable() const {
  Region out = *this;
  out.untileable_ = true;
  return out;
}

std::vector<int> Region::layers() const {
  std::vector<int> out;
  for (const auto& c : cells_)
    if (out.empty() || out.back() != c.layer) out.push_back(c.layer);
  return out;
}

int Region::min_index() const {
  int m = 0;
  bool first = true;
  for (const auto& c : cells_) {
    if (first || c.index < m) m = c.index;
    first = false;
  }
  return m;
}

int Region::max_index() const {
  int m = 0;
  for (const auto& c : cells_) m = std::max(m, c.index);
  return m;
}

}  // namespace lozenge
