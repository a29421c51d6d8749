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

#include "lozenge/count.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "lozenge/error.hpp"
#include "lozenge/regions.hpp"

namespace lozenge {

namespace {

// Cells of one layer with the weights of their possible partners, scaled to
// integers. `right_ok` pairs the cell with the next cell of the layer.
struct SweepCell {
  int index = 0;
  Orientation orientation = Orientation::Up;
  bool right_ok = false;
  bool vertical_ok = false;
  BigInt right_weight{1};
  BigInt vertical_weight{1};
};

struct Profile {
  std::uint64_t pending = 0;  // Down cells of this layer covered from above, not yet scanned
  std::uint64_t below = 0;    // Down cells of the next layer covered from this layer
  bool carry = false;         // previous cell waits for its right neighbour
  bool operator==(const Profile&) const = default;
};

struct ProfileHash {
  std::size_t operator()(const Profile& p) const noexcept {
    std::uint64_t h = p.pending * 0x9E3779B97F4A7C15ULL;
    h ^= p.below + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h ^ static_cast<std::uint64_t>(p.carry));
  }
};

using ProfileMap = std::unordered_map<Profile, BigInt, ProfileHash>;

BigInt lcm_of_denominators(const Region& region) {
  BigInt q = 1;
  for (const auto& [edge, w] : region.weight_overrides()) mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), w.get_den_mpz_t());
  return q;
}

BigInt scaled(const Region& region, const EdgeKey& edge, const BigInt& q, bool weighted) {
  if (!weighted) return 1;
  ExactRational w = region.weight(edge) * ExactRational(q);
  return w.get_num();
}

void add_to(ProfileMap& map, const Profile& key, const BigInt& value) {
  auto [it, inserted] = map.try_emplace(key, value);
  if (!inserted) it->second += value;
}

BigInt sweep(const Region& region, const BigInt& q, bool weighted) {
  const auto& cells = region.cells();
  const int base = region.min_index();
  if ((region.max_index() - base) / 2 >= 64)
    throw CapExceeded("region too wide for the 64-bit sweep profile", 128);
  auto bit = [base](int index) { return std::uint64_t{1} << ((index - base) / 2); };

  ProfileMap states;
  states.emplace(Profile{}, BigInt(1));
  std::size_t pos = 0;
  int expected_layer = cells.front().layer;
  while (pos < cells.size()) {
    const int layer = cells[pos].layer;
    // A skipped layer cannot receive vertical lozenges.
    if (layer != expected_layer) {
      for (auto it = states.begin(); it != states.end();)
        it = it->first.below != 0 ? states.erase(it) : std::next(it);
    }
    std::size_t end = pos;
    while (end < cells.size() && cells[end].layer == layer) ++end;

    std::vector<SweepCell> row;
    for (std::size_t k = pos; k < end; ++k) {
      const TriangleCell& c = cells[k];
      SweepCell s{c.index, c.orientation};
      if (k + 1 < end && cells[k + 1].index == c.index + 1) {
        const auto key = *edge_key(c, cells[k + 1]);
        if (!region.barred(key)) {
          s.right_ok = true;
          s.right_weight = scaled(region, key, q, weighted);
        }
      }
      if (c.orientation == Orientation::Up) {
        const TriangleCell below = cell_at(layer + 1, c.index);
        const EdgeKey key{c, below};
        if (region.contains(below) && !region.barred(key)) {
          s.vertical_ok = true;
          s.vertical_weight = scaled(region, key, q, weighted);
        }
      }
      row.push_back(std::move(s));
    }

    ProfileMap current;
    for (auto& [p, v] : states) current.emplace(Profile{p.below, 0, false}, std::move(v));

    for (std::size_t k = 0; k < row.size(); ++k) {
      const SweepCell& s = row[k];
      const BigInt* carry_weight = k > 0 && row[k - 1].right_ok ? &row[k - 1].right_weight : nullptr;
      ProfileMap next;
      for (const auto& [p, v] : current) {
        const bool covered = s.orientation == Orientation::Down && (p.pending & bit(s.index)) != 0;
        Profile base_state = p;
        if (s.orientation == Orientation::Down) base_state.pending &= ~bit(s.index);
        base_state.carry = false;
        if (p.carry) {
          if (covered || carry_weight == nullptr) continue;
          add_to(next, base_state, v * *carry_weight);
          continue;
        }
        if (covered) {
          add_to(next, base_state, v);
          continue;
        }
        if (s.right_ok) {
          Profile open = base_state;
          open.carry = true;
          add_to(next, open, v);
        }
        if (s.vertical_ok) {
          Profile down = base_state;
          down.below |= bit(s.index);
          add_to(next, down, v * s.vertical_weight);
        }
      }
      current = std::move(next);
    }

    states.clear();
    for (auto& [p, v] : current)
      if (!p.carry && p.pending == 0) add_to(states, Profile{0, p.below, false}, v);
    expected_layer = layer + 1;
    pos = end;
  }
  auto it = states.find(Profile{});
  return it == states.end() ? BigInt(0) : it->second;
}

bool trivially_zero(const Region& region) { return region.untileable() || !region.balanced(); }

// Indexed adjacency of admissible placements, partners in neighbors() order.
struct Adjacency {
  std::vector<std::vector<std::size_t>> partners;
  std::vector<std::vector<ExactRational>> weights;
};

Adjacency adjacency(const Region& region) {
  const auto& cells = region.cells();
  Adjacency adj;
  adj.partners.resize(cells.size());
  adj.weights.resize(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (const auto& nb : neighbors(cells[i])) {
      auto it = std::lower_bound(cells.begin(), cells.end(), nb);
      if (it == cells.end() || *it != nb) continue;
      const auto key = *edge_key(cells[i], nb);
      if (region.barred(key)) continue;
      adj.partners[i].push_back(static_cast<std::size_t>(it - cells.begin()));
      adj.weights[i].push_back(region.weight(key));
    }
  }
  return adj;
}

// Depth-first matching of the first uncovered cell; `visit` sees each
// complete matching as (cell, partner) index pairs.
void each_matching(const Adjacency& adj,
                   const std::function<void(const std::vector<std::pair<std::size_t, std::size_t>>&)>& visit) {
  const std::size_t n = adj.partners.size();
  std::vector<bool> covered(n, false);
  std::vector<std::pair<std::size_t, std::size_t>> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    while (from < n && covered[from]) ++from;
    if (from == n) {
      visit(chosen);
      return;
    }
    covered[from] = true;
    for (std::size_t j : adj.partners[from]) {
      if (covered[j]) continue;
      covered[j] = true;
      chosen.emplace_back(from, j);
      rec(from + 1);
      chosen.pop_back();
      covered[j] = false;
    }
    covered[from] = false;
  };
  rec(0);
}

ExactRational oracle_sum(const Adjacency& adj) {
  const std::size_t n = adj.partners.size();
  std::vector<bool> covered(n, false);
  std::function<ExactRational(std::size_t)> rec = [&](std::size_t from) -> ExactRational {
    while (from < n && covered[from]) ++from;
    if (from == n) return 1;
    ExactRational total = 0;
    covered[from] = true;
    for (std::size_t k = 0; k < adj.partners[from].size(); ++k) {
      const std::size_t j = adj.partners[from][k];
      if (covered[j]) continue;
      covered[j] = true;
      total += adj.weights[from][k] * rec(from + 1);
      covered[j] = false;
    }
    covered[from] = false;
    return total;
  };
  return rec(0);
}

}  // namespace

ExactRational Tiling::weight() const {
  ExactRational w = 1;
  for (const auto& p : placements) w *= p.weight;
  return w;
}

DualGraph dual_graph(const Region& region) {
  DualGraph g;
  g.vertices = region.cells();
  for (const auto& c : region.cells()) {
    if (c.orientation != Orientation::Up) continue;
    for (const auto& nb : neighbors(c)) {
      const EdgeKey key{c, nb};
      if (region.admissible(key)) g.edges.push_back(LozengePlacement{c, nb, region.weight(key)});
    }
  }
  return g;
}

ExactRational count_tilings(const Region& region) {
  if (trivially_zero(region)) return 0;
  if (region.empty()) return 1;
  const BigInt q = lcm_of_denominators(region);
  ExactRational total(sweep(region, q, true));
  BigInt scale;
  mpz_pow_ui(scale.get_mpz_t(), q.get_mpz_t(), region.size() / 2);
  total /= ExactRational(scale);
  return total;
}

BigInt count_unweighted(const Region& region) {
  if (trivially_zero(region)) return 0;
  if (region.empty()) return 1;
  return sweep(region, 1, false);
}

ExactRational count_tilings_oracle(const Region& region, std::size_t cell_cap) {
  if (region.size() > cell_cap)
    throw CapExceeded("oracle refuses a region of " + std::to_string(region.size()) + " cells",
                      static_cast<long long>(cell_cap));
  if (trivially_zero(region)) return 0;
  return oracle_sum(adjacency(region));
}

std::vector<Tiling> enumerate_tilings(const Region& region, std::size_t cap) {
  if (trivially_zero(region)) return {};
  const BigInt total = count_unweighted(region);
  if (total > BigInt(static_cast<unsigned long>(cap)))
    throw CapExceeded("region has " + total.get_str() + " tilings", static_cast<long long>(cap));
  const auto& cells = region.cells();
  const Adjacency adj = adjacency(region);
  std::vector<Tiling> out;
  each_matching(adj, [&](const std::vector<std::pair<std::size_t, std::size_t>>& chosen) {
    Tiling t;
    for (const auto& [i, j] : chosen) {
      const auto key = *edge_key(cells[i], cells[j]);
      t.placements.push_back(LozengePlacement{key.up, key.down, region.weight(key)});
    }
    std::sort(t.placements.begin(), t.placements.end(),
              [](const LozengePlacement& a, const LozengePlacement& b) { return a.key() < b.key(); });
    out.push_back(std::move(t));
  });
  return out;
}

ExactRational count_reflective(const RegionSpec& rs, ReflectiveMethod method, std::size_t cap) {
  if (rs.family != Family::RS) throw InvalidParameters("count_reflective expects an RS spec");
  const auto& p = rs.dented_params();
  if (p.x % 2 != 0) return 0;
  validate(rs);
  if (method == ReflectiveMethod::Reduce) {
    const int full = axis_length(rs);
    if (full % 2 == 1 && p.barriers.contains((full + 1) / 2)) return 0;
    if (p.y == 0 && (p.up.empty() || p.down.empty()))
      return count_tilings(halve_symmetric(build_region(rs)));
    return count_tilings(build_region(reduce_reflective(rs)));
  }

  const Region region = build_region(rs);
  const int sum = mirror_sum(region);
  for (const auto& c : region.cells())
    if (!region.contains(reflect_horizontally(c, sum)))
      throw std::logic_error("RS region is not mirror symmetric");
  ExactRational total = 0;
  for (const auto& t : enumerate_tilings(region, cap)) {
    std::vector<EdgeKey> keys;
    std::vector<EdgeKey> mirrored;
    for (const auto& pl : t.placements) {
      keys.push_back(pl.key());
      mirrored.push_back(*edge_key(reflect_horizontally(pl.up, sum), reflect_horizontally(pl.down, sum)));
    }
    std::sort(mirrored.begin(), mirrored.end());
    if (keys == mirrored) total += t.weight();
  }
  return total;
}

std::pair<int, int> extreme_free_positions(const RegionSpec& spec) {
  const auto& p = spec.dented_params();
  const PositionSet free =
      p.up.united(p.down).united(p.barriers).complement(p.x + p.y + p.dent_count());
  if (free.size() < 2) throw InvalidParameters("fewer than two free positions on the axis");
  return {free.front(), free.back()};
}

KuoCounts kuo_counts(const RegionSpec& spec, int alpha, int beta) {
  if (!is_halved_family(spec.family))
    throw InvalidParameters("the condensation recurrence applies to F, Fbar, W, Wbar");
  validate(spec);
  const auto& p = spec.dented_params();
  if (alpha >= beta) throw InvalidParameters("alpha must be smaller than beta");
  const auto [first, last] = extreme_free_positions(spec);
  if (alpha != first || beta != last)
    throw InvalidParameters("alpha and beta must be the first and last free positions (" +
                            std::to_string(first) + ", " + std::to_string(last) + ")");
  if (p.y < 1) throw InvalidParameters("the recurrence needs y >= 1");
  if (p.x <= static_cast<int>(p.barriers.size()))
    throw InvalidParameters("the recurrence needs x > |B|");
  auto count = [&](int x, int y, const PositionSet& up) {
    return count_tilings(build_region(RegionSpec::dented(spec.family, x, y, up, p.down, p.barriers)));
  };
  KuoCounts k;
  k.whole = count(p.x, p.y, p.up);
  k.both = count(p.x - 1, p.y - 1, p.up.with(alpha).with(beta));
  k.beta_up = count(p.x - 1, p.y, p.up.with(beta));
  k.alpha_low = count(p.x, p.y - 1, p.up.with(alpha));
  k.alpha_up = count(p.x - 1, p.y, p.up.with(alpha));
  k.beta_low = count(p.x, p.y - 1, p.up.with(beta));
  return k;
}

}  // namespace lozenge
