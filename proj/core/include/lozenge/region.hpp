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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lozenge/lattice.hpp"
#include "lozenge/rational.hpp"
#include "lozenge/region_spec.hpp"

namespace lozenge {

// A finite set of unit triangles together with lozenge weights (default 1)
// and barred edges (lozenges excluded from every tiling). Immutable once
// built; every mutator returns a new Region.
class Region {
 public:
  Region() = default;
  Region(std::vector<TriangleCell> cells, std::map<EdgeKey, ExactRational> weights = {},
         std::set<EdgeKey> barred = {});

  const std::vector<TriangleCell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  bool contains(const TriangleCell& cell) const;

  std::size_t up_count() const { return up_count_; }
  std::size_t down_count() const { return cells_.size() - up_count_; }
  bool balanced() const { return up_count_ * 2 == cells_.size(); }

  // Weight of the lozenge on this edge; 1 unless overridden.
  ExactRational weight(const EdgeKey& edge) const;
  bool barred(const EdgeKey& edge) const { return barred_.count(edge) != 0; }
  // True when both cells are present and the edge is not barred.
  bool admissible(const EdgeKey& edge) const;

  const std::map<EdgeKey, ExactRational>& weight_overrides() const { return weights_; }
  const std::set<EdgeKey>& barred_edges() const { return barred_; }

  // Set by forced-lozenge removal when some cell has no available partner.
  bool untileable() const { return untileable_; }

  const std::optional<RegionSpec>& label() const { return label_; }
  // Triangles removed from the parent shape (dents), kept for rendering.
  const std::vector<TriangleCell>& dents() const { return dents_; }

  Region with_label(RegionSpec spec) const;
  Region with_dents(std::vector<TriangleCell> dents) const;
  Region with_barrier(const EdgeKey& edge) const;
  Region with_weight(const EdgeKey& edge, ExactRational weight) const;
  Region without_cells(const std::vector<TriangleCell>& removed) const;
  Region marked_untileable() const;

  // Distinct layers present, ascending.
  std::vector<int> layers() const;
  int min_index() const;
  int max_index() const;

 private:
  void index_cells();

  std::vector<TriangleCell> cells_;
  std::map<EdgeKey, ExactRational> weights_;
  std::set<EdgeKey> barred_;
  std::optional<RegionSpec> label_;
  std::vector<TriangleCell> dents_;
  std::size_t up_count_ = 0;
  bool untileable_ = false;
};

}  // namespace lozenge
