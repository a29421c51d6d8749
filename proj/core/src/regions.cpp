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

#include "lozenge/regions.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "lozenge/error.hpp"

namespace lozenge {

namespace {

constexpr int kLeft = -1;   // boundary moves half a unit left per layer
constexpr int kRight = +1;  // boundary moves half a unit right per layer

// Left/right ends of every horizontal lattice line of a traced shape, in the
// doubled horizontal coordinate used by TriangleCell::index.
struct Outline {
  std::vector<int> left_step;
  std::vector<int> right_step;
  std::vector<int> line_left;
  std::vector<int> line_right;

  int layers() const { return static_cast<int>(left_step.size()); }
  // Cell of the dent axis segment `position` directly above (Up) or below
  // (Down) lattice line `line`.
  TriangleCell above(int line, int position) const {
    return cell_at(line - 1, line_left[line] + 2 * position - 1);
  }
  TriangleCell below(int line, int position) const {
    return cell_at(line, line_left[line] + 2 * position - 1);
  }
};

std::vector<int> repeat(int step, int count) { return std::vector<int>(std::max(count, 0), step); }

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Vertical zigzag: left, right, left, ... starting with a left step.
std::vector<int> zigzag(int count) {
  std::vector<int> out;
  for (int i = 0; i < count; ++i) out.push_back(i % 2 == 0 ? kLeft : kRight);
  return out;
}

Outline trace(int top_length, std::vector<int> left, std::vector<int> right) {
  if (left.size() != right.size()) throw std::logic_error("outline sides disagree on height");
  Outline o;
  o.left_step = std::move(left);
  o.right_step = std::move(right);
  o.line_left.push_back(0);
  o.line_right.push_back(2 * top_length);
  for (int r = 0; r < o.layers(); ++r) {
    o.line_left.push_back(o.line_left.back() + o.left_step[r]);
    o.line_right.push_back(o.line_right.back() + o.right_step[r]);
  }
  return o;
}

struct Draft {
  std::set<TriangleCell> cells;
  std::map<EdgeKey, ExactRational> weights;
  std::set<EdgeKey> barred;
  std::vector<TriangleCell> dents;
  Outline outline;
};

Draft fill(Outline outline) {
  Draft d;
  for (int r = 0; r < outline.layers(); ++r) {
    const int first = outline.left_step[r] == kLeft ? outline.line_left[r] : outline.line_left[r] + 1;
    const int last =
        outline.right_step[r] == kRight ? outline.line_right[r] : outline.line_right[r] - 1;
    for (int i = first; i <= last; ++i) d.cells.insert(cell_at(r, i));
  }
  d.outline = std::move(outline);
  return d;
}

void remove_dent(Draft& d, const TriangleCell& cell) {
  if (d.cells.erase(cell) == 0)
    throw std::logic_error("dent " + to_string(cell) + " is not a cell of the traced shape");
  d.dents.push_back(cell);
}

// Removes Up dents above and Down dents below lattice line `line`, and bars
// the vertical lozenges across the barrier positions.
void apply_axis(Draft& d, int line, const PositionSet& up, const PositionSet& down,
                const PositionSet& barriers) {
  for (int p : up) remove_dent(d, d.outline.above(line, p));
  for (int p : down) remove_dent(d, d.outline.below(line, p));
  for (int p : barriers) d.barred.insert(EdgeKey{d.outline.above(line, p), d.outline.below(line, p)});
}

// Weight 1/2 on each vertical lozenge spanning a bump of the west zigzag: the
// leftmost Up of a layer whose left boundary steps left, paired with the
// leftmost Down of the next layer, whose left boundary steps right.
// `skip_row`: bump straddling line skip_row + 1 stays unweighted.
void weight_west_bumps(Draft& d, int skip_row = -1) {
  const Outline& o = d.outline;
  for (int r = 0; r + 1 < o.layers(); ++r) {
    if (r == skip_row || o.left_step[r] != kLeft || o.left_step[r + 1] != kRight) continue;
    const EdgeKey edge{cell_at(r, o.line_left[r]), cell_at(r + 1, o.line_left[r])};
    if (!d.cells.count(edge.up) || !d.cells.count(edge.down) || d.barred.count(edge)) continue;
    d.weights[edge] = ExactRational(1, 2);
  }
}

Region finish(Draft d, const RegionSpec& spec) {
  int min_index = 0;
  bool first = true;
  for (const auto& c : d.cells) {
    if (first || c.index < min_index) min_index = c.index;
    first = false;
  }
  for (const auto& c : d.dents) {
    if (first || c.index < min_index) min_index = c.index;
    first = false;
  }
  // Even shift keeps the parity rule intact.
  const int shift = (min_index % 2 == 0) ? -min_index : -min_index + 1;
  auto moved = [shift](const TriangleCell& c) { return cell_at(c.layer, c.index + shift); };
  auto moved_edge = [&](const EdgeKey& e) { return EdgeKey{moved(e.up), moved(e.down)}; };

  std::vector<TriangleCell> cells;
  for (const auto& c : d.cells) cells.push_back(moved(c));
  std::map<EdgeKey, ExactRational> weights;
  for (const auto& [e, w] : d.weights) weights.emplace(moved_edge(e), w);
  std::set<EdgeKey> barred;
  for (const auto& e : d.barred) barred.insert(moved_edge(e));
  std::vector<TriangleCell> dents;
  for (const auto& c : d.dents) dents.push_back(moved(c));
  return Region(std::move(cells), std::move(weights), std::move(barred))
      .with_dents(std::move(dents))
      .with_label(spec);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParameters(what);
}

void validate_dented(Family family, const DentedParams& p) {
  const std::string name(family_name(family));
  require(p.x >= 0 && p.y >= 0, name + ": x and y must be non-negative");
  require(p.barriers.intersected(p.up.united(p.down)).empty(),
          name + ": barriers must avoid dent positions (B n (U u D) = {})");
  const int n = p.dent_count();
  if (family == Family::RS) {
    const int full = p.x + p.y + 2 * n;
    const int half = (full + 1) / 2;
    require(p.up.within(half) && p.down.within(half) && p.barriers.within(half),
            name + ": U, D, B must lie in [1, ceil((x+y+2n)/2)] = [1," + std::to_string(half) + "]");
    require(static_cast<int>(p.barriers.size()) <= p.x / 2, name + ": |B| must not exceed x/2");
    require(p.x % 2 == 0, name + ": x must be even");
    if (full % 2 == 1) {
      require(!p.up.contains(half) && !p.down.contains(half),
              name + ": the segment on the symmetry axis (position " + std::to_string(half) +
                  ") cannot carry a dent");
    }
    return;
  }
  const int len = p.x + p.y + n;
  require(p.up.within(len) && p.down.within(len) && p.barriers.within(len),
          name + ": U, D, B must lie in [1, x+y+n] = [1," + std::to_string(len) + "]");
  require(static_cast<int>(p.barriers.size()) <= p.x, name + ": |B| must not exceed x");
  if (family == Family::Fbar || family == Family::Wbar) {
    require(p.y >= 1 || (!p.up.empty() && !p.down.empty()),
            name + ": y = 0 needs at least one up and one down dent (halves of odd height)");
  }
}

}  // namespace

void validate(const RegionSpec& spec) {
  const std::string name(family_name(spec.family));
  switch (spec.family) {
    case Family::Hex: {
      const auto& p = spec.hex_params();
      require(p.a >= 0 && p.b >= 0 && p.c >= 0, name + ": side lengths must be non-negative");
      return;
    }
    case Family::P:
    case Family::Pprime: {
      const auto& p = spec.hex_params();
      require(p.a >= 0 && p.b >= 0 && p.c >= 0, name + ": side lengths must be non-negative");
      require(p.a <= p.b, name + ": requires a <= b");
      return;
    }
    case Family::DentedSemihex: {
      const auto& p = spec.semihex_params();
      require(p.a >= 0 && p.b >= 0, name + ": side lengths must be non-negative");
      require(static_cast<int>(p.dents.size()) == p.a, name + ": exactly a dents are required");
      require(p.dents.within(p.a + p.b), name + ": dents must lie in [1, a+b]");
      return;
    }
    case Family::L:
    case Family::Lbar: {
      const auto& p = spec.quartered_params();
      require(p.m >= 0 && p.n >= 0, name + ": m and n must be non-negative");
      const int k = (p.m + 1) / 2;
      require(static_cast<int>(p.dents.size()) == k,
              name + ": exactly floor((m+1)/2) = " + std::to_string(k) + " dents are required");
      require(p.dents.within(p.n + k), name + ": dents must lie in [1, n+k]");
      return;
    }
    default:
      validate_dented(spec.family, spec.dented_params());
  }
}

int axis_length(const RegionSpec& spec) {
  switch (spec.family) {
    case Family::DentedSemihex:
      return spec.semihex_params().a + spec.semihex_params().b;
    case Family::L:
    case Family::Lbar: {
      const auto& p = spec.quartered_params();
      return p.n + (p.m + 1) / 2;
    }
    case Family::RS: {
      const auto& p = spec.dented_params();
      return p.x + p.y + 2 * p.dent_count();
    }
    case Family::H:
    case Family::F:
    case Family::Fbar:
    case Family::W:
    case Family::Wbar: {
      const auto& p = spec.dented_params();
      return p.x + p.y + p.dent_count();
    }
    default:
      return 0;
  }
}

RegionSpec expand_reflective(const RegionSpec& rs) {
  if (rs.family != Family::RS) throw InvalidParameters("expand_reflective expects an RS spec");
  validate(rs);
  const auto& p = rs.dented_params();
  const int mirror = axis_length(rs) + 1;
  return RegionSpec::dented(Family::H, p.x, p.y, p.up.united(p.up.reflected(mirror)),
                            p.down.united(p.down.reflected(mirror)),
                            p.barriers.united(p.barriers.reflected(mirror)));
}

int axis_distance(const RegionSpec& rs, int position) {
  const int full = axis_length(rs);
  return full % 2 == 1 ? (full + 1) / 2 - position : full / 2 + 1 - position;
}

RegionSpec reduce_reflective(const RegionSpec& rs) {
  if (rs.family != Family::RS) throw InvalidParameters("reduce_reflective expects an RS spec");
  validate(rs);
  const auto& p = rs.dented_params();
  const int full = axis_length(rs);
  if (full % 2 == 1 && p.barriers.contains((full + 1) / 2))
    throw InvalidParameters("RS: a barrier on the symmetry axis forbids every symmetric tiling");
  auto remap = [&](const PositionSet& s) {
    std::vector<int> out;
    for (int q : s) out.push_back(axis_distance(rs, q));
    return PositionSet::from_unsorted(std::move(out));
  };
  if (p.y % 2 == 1)
    return RegionSpec::dented(Family::F, p.x / 2, (p.y - 1) / 2, remap(p.up), remap(p.down),
                              remap(p.barriers));
  if (p.y == 0 && (p.up.empty() || p.down.empty()))
    throw InvalidParameters("RS: y = 0 with no up or no down dents has no halved family form");
  return RegionSpec::dented(Family::Fbar, p.x / 2, p.y / 2, remap(p.up), remap(p.down),
                            remap(p.barriers));
}

Region build_region(const RegionSpec& spec) {
  validate(spec);
  switch (spec.family) {
    case Family::Hex: {
      const auto& p = spec.hex_params();
      auto d = fill(trace(p.a, concat(repeat(kLeft, p.c), repeat(kRight, p.b)),
                          concat(repeat(kRight, p.b), repeat(kLeft, p.c))));
      return finish(std::move(d), spec);
    }
    case Family::DentedSemihex: {
      const auto& p = spec.semihex_params();
      auto d = fill(trace(p.b, repeat(kLeft, p.a), repeat(kRight, p.a)));
      apply_axis(d, p.a, p.dents, {}, {});
      return finish(std::move(d), spec);
    }
    case Family::RS: {
      Region full = build_region(expand_reflective(spec));
      return full.with_label(spec);
    }
    case Family::H: {
      const auto& p = spec.dented_params();
      const int n = p.dent_count();
      const int u = static_cast<int>(p.up.size());
      const int dn = static_cast<int>(p.down.size());
      auto d = fill(trace(p.x + n - u, concat(repeat(kLeft, p.y + u), repeat(kRight, p.y + dn)),
                          concat(repeat(kRight, p.y + u), repeat(kLeft, p.y + dn))));
      apply_axis(d, p.y + u, p.up, p.down, p.barriers);
      return finish(std::move(d), spec);
    }
    case Family::F:
    case Family::W:
    case Family::Fbar:
    case Family::Wbar: {
      const auto& p = spec.dented_params();
      const int n = p.dent_count();
      const int u = static_cast<int>(p.up.size());
      const int dn = static_cast<int>(p.down.size());
      const bool odd_halves = spec.family == Family::Fbar || spec.family == Family::Wbar;
      const int upper = 2 * p.y + 2 * u - (odd_halves ? 1 : 0);
      const int lower = 2 * p.y + 2 * dn - (odd_halves ? 1 : 0);
      auto d = fill(trace(p.x + n - u, zigzag(upper + lower),
                          concat(repeat(kRight, upper), repeat(kLeft, lower))));
      apply_axis(d, upper, p.up, p.down, p.barriers);
      if (spec.family == Family::W) weight_west_bumps(d);
      // The Wbar bump across the dent axis belongs to neither half.
      if (spec.family == Family::Wbar) weight_west_bumps(d, upper - 1);
      return finish(std::move(d), spec);
    }
    case Family::L:
    case Family::Lbar: {
      const auto& p = spec.quartered_params();
      auto d = fill(trace(p.n, zigzag(p.m), repeat(kRight, p.m)));
      if (p.m > 0) apply_axis(d, p.m, p.dents, {}, {});
      if (spec.family == Family::Lbar) weight_west_bumps(d);
      return finish(std::move(d), spec);
    }
    case Family::P:
    case Family::Pprime: {
      const auto& p = spec.hex_params();
      auto d = fill(trace(p.c, concat(repeat(kLeft, p.b - p.a), zigzag(2 * p.a)),
                          concat(repeat(kRight, p.a), repeat(kLeft, p.b))));
      if (spec.family == Family::Pprime) weight_west_bumps(d);
      return finish(std::move(d), spec);
    }
  }
  throw std::logic_error("unhandled region family");
}

TriangleCell reflect_horizontally(const TriangleCell& cell, int sum) {
  return cell_at(cell.layer, sum - cell.index);
}

int mirror_sum(const Region& region) {
  int lo = 0;
  int hi = 0;
  bool first = true;
  auto visit = [&](const TriangleCell& c) {
    if (first || c.index < lo) lo = c.index;
    if (first || c.index > hi) hi = c.index;
    first = false;
  };
  for (const auto& c : region.cells()) visit(c);
  for (const auto& c : region.dents()) visit(c);
  return lo + hi;
}

Region halve_symmetric(const Region& region) {
  const int sum = mirror_sum(region);
  if (sum % 2 != 0) throw InvalidParameters("mirror axis does not pass through cell centres");
  const int axis = sum / 2;
  std::vector<TriangleCell> removed;
  bool stuck = false;
  for (const auto& c : region.cells()) {
    if (c.index > axis) {
      removed.push_back(c);
      continue;
    }
    if (c.index < axis) continue;
    removed.push_back(c);
    const TriangleCell partner =
        c.orientation == Orientation::Up ? cell_at(c.layer + 1, c.index) : cell_at(c.layer - 1, c.index);
    const auto key = edge_key(c, partner);
    if (partner.layer < 0 || !key || !region.admissible(*key)) stuck = true;
  }
  Region half = region.without_cells(removed);
  return stuck ? half.marked_untileable() : half;
}

ForcedReduction remove_forced_lozenges(const Region& region) {
  const auto& cells = region.cells();
  const std::size_t n = cells.size();
  auto index_of = [&](const TriangleCell& c) -> long {
    auto it = std::lower_bound(cells.begin(), cells.end(), c);
    return (it != cells.end() && *it == c) ? static_cast<long>(it - cells.begin()) : -1;
  };
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& nb : neighbors(cells[i])) {
      const long j = index_of(nb);
      if (j < 0) continue;
      const auto key = edge_key(cells[i], nb);
      if (key && !region.barred(*key)) adj[i].push_back(static_cast<std::size_t>(j));
    }
  }

  ForcedReduction out;
  std::vector<bool> alive(n, true);
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < n; ++i) queue.push_back(i);
  std::vector<TriangleCell> removed;
  bool stuck = false;

  while (!queue.empty() && !stuck) {
    const std::size_t i = queue.front();
    queue.pop_front();
    if (!alive[i]) continue;
    std::size_t degree = 0;
    std::size_t partner = 0;
    for (std::size_t j : adj[i]) {
      if (alive[j]) {
        ++degree;
        partner = j;
      }
    }
    if (degree == 0) {
      stuck = true;
      break;
    }
    if (degree > 1) continue;
    const auto key = *edge_key(cells[i], cells[partner]);
    const ExactRational w = region.weight(key);
    out.factor *= w;
    out.forced.push_back(LozengePlacement{key.up, key.down, w});
    alive[i] = alive[partner] = false;
    removed.push_back(cells[i]);
    removed.push_back(cells[partner]);
    for (std::size_t k : adj[partner])
      if (alive[k]) queue.push_back(k);
  }

  out.region = region.without_cells(removed);
  if (stuck) out.region = out.region.marked_untileable();
  return out;
}

}  // namespace lozenge
