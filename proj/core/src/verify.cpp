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

#include "lozenge/verify.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include "json.hpp"
#include <ostream>
#include <random>
#include <sstream>

#include "lozenge/count.hpp"
#include "lozenge/error.hpp"
#include "lozenge/regions.hpp"

namespace lozenge {

namespace {

using Clock = std::chrono::steady_clock;

// Portable bounded draws: mt19937_64 output is fully specified, unlike the
// standard distributions.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  int between(int lo, int hi) {
    return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(int one_in) { return between(1, one_in) == 1; }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[static_cast<std::size_t>(between(0, static_cast<int>(i) - 1))]);
  }

 private:
  std::mt19937_64 rng_;
};

struct Timer {
  Clock::time_point start = Clock::now();
  std::chrono::nanoseconds elapsed() const { return Clock::now() - start; }
};

VerificationReport exact_report(std::string check, std::string inputs, ExactRational lhs,
                                ExactRational rhs, const Timer& timer) {
  VerificationReport r;
  r.check = std::move(check);
  r.inputs = std::move(inputs);
  r.verdict = lhs == rhs ? Verdict::Pass : Verdict::Fail;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.elapsed = timer.elapsed();
  return r;
}

ExactRational count_spec(const RegionSpec& spec) {
  if (spec.family == Family::RS) return count_reflective(spec, ReflectiveMethod::Reduce);
  return count_tilings(build_region(spec));
}

// Quartered hexagons the halved family splits into along its dent axis.
struct Halves {
  Family quartered;
  int upper_rows;
  int lower_rows;
  int upper_top;
  int lower_top;
};

Halves halves_of(const RegionSpec& spec) {
  if (!is_halved_family(spec.family))
    throw InvalidParameters("expected a halved hexagon (F, Fbar, W, Wbar)");
  const auto& p = spec.dented_params();
  const int n = p.dent_count();
  const int u = static_cast<int>(p.up.size());
  const int d = static_cast<int>(p.down.size());
  const bool odd = spec.family == Family::Fbar || spec.family == Family::Wbar;
  const bool weighted = spec.family == Family::W || spec.family == Family::Wbar;
  return Halves{weighted ? Family::Lbar : Family::L, 2 * p.y + 2 * u - (odd ? 1 : 0),
                2 * p.y + 2 * d - (odd ? 1 : 0), p.x + n - u, p.x + n - d};
}

ExactRational quartered_dp(Family family, int rows, int top, const PositionSet& dents) {
  return count_tilings(build_region(RegionSpec::quartered(family, rows, top, dents)));
}

PositionSet free_positions(const DentedParams& p) {
  return p.up.united(p.down).united(p.barriers).complement(p.x + p.y + p.dent_count());
}

// All k-subsets of `from`, in lexicographic order.
void each_subset(const PositionSet& from, int k, const std::function<void(const PositionSet&)>& visit) {
  std::vector<int> chosen;
  const auto& e = from.elems();
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (static_cast<int>(chosen.size()) == k) {
      visit(PositionSet(chosen));
      return;
    }
    for (std::size_t j = i; j < e.size(); ++j) {
      chosen.push_back(e[j]);
      rec(j + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

std::string describe_case(const ShuffleCase& c) {
  std::ostringstream os;
  os << ratio_family_name(c.ratio.family) << " x=" << c.x << " y=" << c.ratio.y
     << " U=" << to_string(c.ratio.up) << " D=" << to_string(c.ratio.down)
     << " U'=" << to_string(c.ratio.up_shuffled) << " D'=" << to_string(c.ratio.down_shuffled)
     << " B=" << to_string(c.barriers);
  return os.str();
}

std::string describe_clusters(const ClusterSpec& s) {
  std::ostringstream os;
  os << "start=" << s.start << " [";
  for (std::size_t i = 0; i < s.clusters.size(); ++i) {
    const auto& c = s.clusters[i];
    if (i > 0) os << " gap " << s.gaps[i - 1] << ' ';
    os << "(f=" << c.size << " U=" << to_string(c.up) << " D=" << to_string(c.down)
       << " B=" << to_string(c.barriers) << ')';
  }
  os << ']';
  return os.str();
}

// Random typed dents on `domain`: up, down or both, then a shuffle of the
// symmetric difference that keeps U u D and U n D.
struct DentDraw {
  PositionSet up, down, up2, down2;
};

DentDraw draw_dents(Draw& d, std::vector<int> domain, int n) {
  d.shuffle(domain);
  std::vector<int> up, down, up2, down2;
  for (int i = 0; i < n; ++i) {
    const int p = domain[static_cast<std::size_t>(i)];
    const int kind = d.chance(5) ? 2 : d.between(0, 1);
    if (kind == 2) {
      up.push_back(p);
      down.push_back(p);
      up2.push_back(p);
      down2.push_back(p);
      continue;
    }
    (kind == 0 ? up : down).push_back(p);
    (d.between(0, 1) == 0 ? up2 : down2).push_back(p);
  }
  return {PositionSet::from_unsorted(up), PositionSet::from_unsorted(down),
          PositionSet::from_unsorted(up2), PositionSet::from_unsorted(down2)};
}

std::vector<int> iota_vec(int first, int last) {
  std::vector<int> v;
  for (int i = first; i <= last; ++i) v.push_back(i);
  return v;
}

PositionSet random_subset(Draw& d, const PositionSet& from, int size) {
  std::vector<int> v = from.elems();
  d.shuffle(v);
  v.resize(static_cast<std::size_t>(std::min<int>(size, static_cast<int>(v.size()))));
  return PositionSet::from_unsorted(v);
}

bool valid(const RegionSpec& spec) {
  try {
    validate(spec);
    return true;
  } catch (const InvalidParameters&) {
    return false;
  }
}

}  // namespace

std::string_view verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Vacuous:
      return "vacuous";
    case Verdict::Skipped:
      return "skipped";
  }
  return "?";
}

Family region_family(RatioFamily family) {
  switch (family) {
    case RatioFamily::H:
      return Family::H;
    case RatioFamily::RSOdd:
    case RatioFamily::RSEven:
      return Family::RS;
    case RatioFamily::F:
      return Family::F;
    case RatioFamily::Fbar:
      return Family::Fbar;
    case RatioFamily::W:
      return Family::W;
    case RatioFamily::Wbar:
      return Family::Wbar;
  }
  throw std::logic_error("unhandled ratio family");
}

RegionSpec numerator_spec(const ShuffleCase& c) {
  return RegionSpec::dented(region_family(c.ratio.family), c.x, c.ratio.y, c.ratio.up, c.ratio.down,
                            c.barriers);
}

RegionSpec denominator_spec(const ShuffleCase& c) {
  return RegionSpec::dented(region_family(c.ratio.family), c.x, c.ratio.y, c.ratio.up_shuffled,
                            c.ratio.down_shuffled, c.barriers);
}

RatioSpec axis_relative(const ShuffleCase& c) {
  if (region_family(c.ratio.family) != Family::RS) return c.ratio;
  const RegionSpec rs = numerator_spec(c);
  auto remap = [&rs](const PositionSet& s) {
    std::vector<int> out;
    for (int p : s) out.push_back(axis_distance(rs, p));
    return PositionSet::from_unsorted(out);
  };
  RatioSpec out = c.ratio;
  out.up = remap(c.ratio.up);
  out.down = remap(c.ratio.down);
  out.up_shuffled = remap(c.ratio.up_shuffled);
  out.down_shuffled = remap(c.ratio.down_shuffled);
  return out;
}

VerificationReport check_shuffling(const ShuffleCase& c) {
  Timer timer;
  validate(c.ratio);
  if (c.ratio.family == RatioFamily::RSOdd && c.ratio.y % 2 == 0)
    throw InvalidParameters("RS-odd needs odd y");
  if (c.ratio.family == RatioFamily::RSEven && c.ratio.y % 2 != 0)
    throw InvalidParameters("RS-even needs even y");
  const RegionSpec num = numerator_spec(c);
  const RegionSpec den = denominator_spec(c);
  validate(num);
  validate(den);
  const ExactRational rhs = shuffle_ratio(axis_relative(c));
  const ExactRational bottom = count_spec(den);
  if (bottom == 0) {
    VerificationReport r;
    r.check = "shuffling";
    r.inputs = describe_case(c);
    r.rhs = rhs;
    r.verdict = Verdict::Vacuous;
    r.note = "denominator region has no tiling";
    r.elapsed = timer.elapsed();
    return r;
  }
  return exact_report("shuffling", describe_case(c), count_spec(num) / bottom, rhs, timer);
}

VerificationReport check_kuo_recurrence(const RegionSpec& spec) {
  Timer timer;
  const auto [alpha, beta] = extreme_free_positions(spec);
  const KuoCounts k = kuo_counts(spec, alpha, beta);
  auto r = exact_report("kuo", describe(spec), k.lhs(), k.rhs(), timer);
  r.note = "alpha=" + std::to_string(alpha) + " beta=" + std::to_string(beta);
  return r;
}

VerificationReport check_base_cases(const RegionSpec& spec) {
  Timer timer;
  validate(spec);
  const Halves h = halves_of(spec);
  const auto& p = spec.dented_params();
  PositionSet upper = p.up;
  PositionSet lower = p.down;
  std::string regime = "y=0";
  if (p.y != 0) {
    if (p.x != static_cast<int>(p.barriers.size()))
      throw InvalidParameters("not a base case: need y = 0 or x = |B|");
    const PositionSet free = free_positions(p);
    upper = upper.united(free);
    lower = lower.united(free);
    regime = "x=|B|";
  }
  const ExactRational top_dp = quartered_dp(h.quartered, h.upper_rows, h.upper_top, upper);
  const ExactRational bottom_dp = quartered_dp(h.quartered, h.lower_rows, h.lower_top, lower);
  const ExactRational top_formula = quartered_count(h.quartered, h.upper_rows, upper);
  const ExactRational bottom_formula = quartered_count(h.quartered, h.lower_rows, lower);
  auto r = exact_report("base", describe(spec), count_tilings(build_region(spec)), top_dp * bottom_dp, timer);
  r.note = regime + " upper=" + std::string(family_name(h.quartered)) + "_" + std::to_string(h.upper_rows) +
           to_string(upper) + " lower=" + std::string(family_name(h.quartered)) + "_" +
           std::to_string(h.lower_rows) + to_string(lower);
  if (top_dp != top_formula || bottom_dp != bottom_formula) {
    r.verdict = Verdict::Fail;
    r.note += " closed form disagrees with the sweep";
  }
  return r;
}

VerificationReport check_decomposition(const RegionSpec& spec) {
  Timer timer;
  validate(spec);
  const Halves h = halves_of(spec);
  const auto& p = spec.dented_params();
  const PositionSet free = free_positions(p);
  ExactRational sum = 0;
  int terms = 0;
  each_subset(free, p.y, [&](const PositionSet& s) {
    sum += quartered_dp(h.quartered, h.upper_rows, h.upper_top, p.up.united(s)) *
           quartered_dp(h.quartered, h.lower_rows, h.lower_top, p.down.united(s));
    ++terms;
  });
  auto r = exact_report("decomposition", describe(spec), count_tilings(build_region(spec)), sum, timer);
  r.note = std::to_string(terms) + " subsets";
  return r;
}

void validate(const ClusterSpec& spec) {
  if (spec.start < 0) throw InvalidParameters("clusters: start must be non-negative");
  const std::size_t k = spec.clusters.size();
  if (spec.gaps.size() != (k == 0 ? 0 : k - 1))
    throw InvalidParameters("clusters: need one gap between consecutive clusters");
  for (int g : spec.gaps)
    if (g <= 0) throw InvalidParameters("clusters: gaps must be positive");
  for (const auto& c : spec.clusters) {
    if (c.size <= 0) throw InvalidParameters("clusters: every cluster spans at least one position");
    if (!c.up.within(c.size) || !c.down.within(c.size) || !c.barriers.within(c.size))
      throw InvalidParameters("clusters: positions must lie in [1, f_i]");
    if (!c.barriers.intersected(c.up.united(c.down)).empty())
      throw InvalidParameters("clusters: barriers must avoid dents");
  }
}

PlacedObstacles place(const ClusterSpec& spec, int scale) {
  validate(spec);
  std::vector<int> up, down, barriers;
  int offset = spec.start;
  for (std::size_t i = 0; i < spec.clusters.size(); ++i) {
    const auto& c = spec.clusters[i];
    for (int p : c.up) up.push_back(p + offset);
    for (int p : c.down) down.push_back(p + offset);
    for (int p : c.barriers) barriers.push_back(p + offset);
    offset += c.size;
    if (i < spec.gaps.size()) offset += spec.gaps[i] * scale;
  }
  return {PositionSet(up), PositionSet(down), PositionSet(barriers)};
}

VerificationReport check_fern_reduction(const ClusterSpec& clusters, int x, int y) {
  Timer timer;
  for (const auto& c : clusters.clusters) {
    if (!c.up.intersected(c.down).empty())
      throw InvalidParameters("fern reduction needs U_i and D_i disjoint");
    if (!c.barriers.empty()) throw InvalidParameters("fern reduction takes no barriers");
  }
  const PlacedObstacles o = place(clusters);
  const RegionSpec spec = RegionSpec::dented(Family::F, x, y, o.up, o.down);
  const Region region = build_region(spec);
  const ForcedReduction reduced = remove_forced_lozenges(region);
  auto r = exact_report("fern", describe(spec) + " " + describe_clusters(clusters), count_tilings(region),
                        reduced.factor * count_tilings(reduced.region), timer);
  r.note = std::to_string(reduced.forced.size()) + " forced lozenges, factor " + to_string(reduced.factor);
  return r;
}

ExactRational asymptotic_limit(const ClusterSpec& original, const ClusterSpec& shuffled, Family family) {
  validate(original);
  validate(shuffled);
  if (!is_halved_family(family)) throw InvalidParameters("asymptotic limits exist for F, Fbar, W, Wbar");
  if (original.clusters.size() != shuffled.clusters.size())
    throw InvalidParameters("shuffled clusters must match the originals one to one");
  const bool odd = family == Family::Fbar || family == Family::Wbar;
  const Family quartered = (family == Family::W || family == Family::Wbar) ? Family::Lbar : Family::L;
  auto s = [&](const PositionSet& dents) {
    const int k = static_cast<int>(dents.size());
    if (k == 0) return ExactRational(1);
    return quartered_count(quartered, 2 * k - (odd ? 1 : 0), dents);
  };
  ExactRational out = 1;
  for (std::size_t i = 0; i < original.clusters.size(); ++i) {
    const auto& c = original.clusters[i];
    const auto& c2 = shuffled.clusters[i];
    if (c.size != c2.size || c.up.size() != c2.up.size() || c.down.size() != c2.down.size() ||
        c.barriers.size() != c2.barriers.size())
      throw InvalidParameters("shuffled cluster must keep f_i, u_i, d_i and b_i");
    out *= s(c.up) * s(c.down) / (s(c2.up) * s(c2.down));
  }
  return out;
}

VerificationReport asymptotic_probe(const ClusterSpec& original, const ClusterSpec& shuffled, Family family,
                                    int x, int y, int n_max, std::size_t cell_cap, ProbeResult* detail) {
  Timer timer;
  if (n_max < 1) throw InvalidParameters("asymptotic probe needs Nmax >= 1");
  ProbeResult res;
  res.limit = asymptotic_limit(original, shuffled, family);
  for (int scale = 1; scale <= n_max; ++scale) {
    const PlacedObstacles a = place(original, scale);
    const PlacedObstacles b = place(shuffled, scale);
    const RegionSpec num = RegionSpec::dented(family, scale * x, scale * y, a.up, a.down, a.barriers);
    const RegionSpec den = RegionSpec::dented(family, scale * x, scale * y, b.up, b.down, b.barriers);
    const Region rn = build_region(num);
    const Region rd = build_region(den);
    if (rn.size() > cell_cap || rd.size() > cell_cap) {
      res.truncated = true;
      break;
    }
    const ExactRational bottom = count_tilings(rd);
    if (bottom == 0) throw InvalidParameters("shuffled region has no tiling at scale " + std::to_string(scale));
    res.ratios.push_back(count_tilings(rn) / bottom);
    res.deviations.push_back(abs(res.ratios.back() - res.limit));
  }
  VerificationReport r;
  r.check = "asymptotic";
  r.inputs = std::string(family_name(family)) + " x=" + std::to_string(x) + " y=" + std::to_string(y) +
             " C=" + describe_clusters(original) + " C'=" + describe_clusters(shuffled);
  r.rhs = res.limit;
  if (res.ratios.empty()) {
    r.verdict = Verdict::Skipped;
    r.note = "first scale already exceeds the cell cap";
  } else {
    r.lhs = res.ratios.back();
    const auto best = *std::min_element(res.deviations.begin(), res.deviations.end());
    r.verdict = res.deviations.back() == best ? Verdict::Pass : Verdict::Fail;
    std::ostringstream os;
    os << "deviations";
    for (const auto& dv : res.deviations) os << ' ' << to_string(dv);
    if (res.truncated) os << " (truncated at N=" << res.ratios.size() << ")";
    r.note = os.str();
  }
  r.elapsed = timer.elapsed();
  if (detail) *detail = std::move(res);
  return r;
}

VerificationReport check_reflective(const RegionSpec& rs, std::size_t cap) {
  Timer timer;
  try {
    const ExactRational filter = count_reflective(rs, ReflectiveMethod::Filter, cap);
    return exact_report("reflective", describe(rs), filter, count_reflective(rs, ReflectiveMethod::Reduce),
                        timer);
  } catch (const CapExceeded& e) {
    VerificationReport r;
    r.check = "reflective";
    r.inputs = describe(rs);
    r.verdict = Verdict::Skipped;
    r.note = e.what();
    r.elapsed = timer.elapsed();
    return r;
  }
}

VerificationReport check_oracle(const Region& region, const std::string& inputs) {
  Timer timer;
  return exact_report("oracle", inputs, count_tilings(region), count_tilings_oracle(region), timer);
}

std::vector<ShuffleCase> random_shuffle_cases(std::uint64_t seed, int budget,
                                              const std::vector<RatioFamily>& families, int barrier_sets,
                                              int max_size) {
  std::vector<ShuffleCase> out;
  if (budget <= 0 || families.empty()) return out;
  Draw d(seed);
  const int sets = std::max(barrier_sets, 1);
  std::size_t turn = 0;
  while (static_cast<int>(out.size()) < budget) {
    const RatioFamily family = families[turn % families.size()];
    const bool rs = region_family(family) == Family::RS;
    int y = d.between(0, 2);
    if (family == RatioFamily::RSOdd) y = d.between(0, 1) * 2 + 1;
    if (family == RatioFamily::RSEven) y = d.between(0, 1) * 2;
    const int x = rs ? 2 * d.between(1, 2) : d.between(1, 3);
    if (x + y + 1 > max_size) continue;
    const int n = d.between(1, max_size - x - y);

    std::vector<int> domain;
    if (rs) {
      const int full = x + y + 2 * n;
      const int half = (full + 1) / 2;
      domain = iota_vec(1, full % 2 == 1 ? half - 1 : half);
    } else {
      domain = iota_vec(1, x + y + n);
    }
    if (static_cast<int>(domain.size()) < n) continue;
    const DentDraw dents = draw_dents(d, domain, n);
    if (dents.up == dents.up2 && dents.down == dents.down2 && d.between(0, 3) != 0) continue;
    const bool odd_halves = family == RatioFamily::Fbar || family == RatioFamily::Wbar ||
                            (family == RatioFamily::RSEven && y == 0);
    if (odd_halves && y == 0 &&
        (dents.up.empty() || dents.down.empty() || dents.up2.empty() || dents.down2.empty()))
      continue;

    PositionSet free = PositionSet(domain).without(dents.up.united(dents.down));
    const int bmax = std::min<int>(rs ? x / 2 : x, static_cast<int>(free.size()));
    std::vector<PositionSet> barrier_choices{PositionSet{}};
    for (int tries = 0; static_cast<int>(barrier_choices.size()) < sets && tries < 40; ++tries) {
      if (bmax == 0) break;
      PositionSet b = random_subset(d, free, d.between(1, bmax));
      if (std::find(barrier_choices.begin(), barrier_choices.end(), b) == barrier_choices.end())
        barrier_choices.push_back(b);
    }
    if (static_cast<int>(barrier_choices.size()) < sets) continue;
    ++turn;
    for (const auto& b : barrier_choices) {
      if (static_cast<int>(out.size()) == budget) break;
      out.push_back(ShuffleCase{RatioSpec{family, dents.up, dents.down, dents.up2, dents.down2, y}, x, b});
    }
  }
  return out;
}

std::vector<RegionSpec> random_kuo_cases(std::uint64_t seed, int budget, int max_size) {
  std::vector<RegionSpec> out;
  Draw d(seed);
  int turn = 0;
  while (static_cast<int>(out.size()) < budget) {
    static constexpr Family kHalved[] = {Family::F, Family::Fbar, Family::W, Family::Wbar};
    const Family family = kHalved[turn % 4];
    const int x = d.between(1, 3);
    const int y = d.between(1, 2);
    if (x + y > max_size) continue;
    const int n = d.between(0, max_size - x - y);
    const DentDraw dents = draw_dents(d, iota_vec(1, x + y + n), n);
    const PositionSet free = dents.up.united(dents.down).complement(x + y + n);
    const PositionSet b = random_subset(d, free, d.between(0, x - 1));
    const RegionSpec spec = RegionSpec::dented(family, x, y, dents.up, dents.down, b);
    if (!valid(spec)) continue;
    try {
      const auto [alpha, beta] = extreme_free_positions(spec);
      const auto& p = spec.dented_params();
      const RegionSpec shifted[] = {
          RegionSpec::dented(family, x - 1, y - 1, p.up.with(alpha).with(beta), p.down, b),
          RegionSpec::dented(family, x - 1, y, p.up.with(beta), p.down, b),
          RegionSpec::dented(family, x, y - 1, p.up.with(alpha), p.down, b),
      };
      if (!std::all_of(std::begin(shifted), std::end(shifted), valid)) continue;
    } catch (const InvalidParameters&) {
      continue;
    }
    ++turn;
    out.push_back(spec);
  }
  return out;
}

std::vector<RegionSpec> random_decomposition_cases(std::uint64_t seed, int budget, int max_size) {
  std::vector<RegionSpec> out;
  Draw d(seed);
  while (static_cast<int>(out.size()) < budget) {
    const int x = d.between(0, 3);
    const int y = d.between(1, 3);
    if (x + y > max_size) continue;
    const int n = d.between(0, max_size - x - y);
    const DentDraw dents = draw_dents(d, iota_vec(1, x + y + n), n);
    const PositionSet free = dents.up.united(dents.down).complement(x + y + n);
    const PositionSet b = random_subset(d, free, d.between(0, x));
    const RegionSpec spec = RegionSpec::dented(Family::F, x, y, dents.up, dents.down, b);
    if (valid(spec)) out.push_back(spec);
  }
  return out;
}

std::vector<RegionSpec> base_case_sweep(int max_size) {
  std::vector<RegionSpec> out;
  for (Family family : {Family::F, Family::Fbar, Family::W, Family::Wbar}) {
    for (int x = 0; x <= max_size; ++x) {
      for (int y = 0; x + y <= max_size; ++y) {
        for (int n = 0; x + y + n <= max_size; ++n) {
          const int len = x + y + n;
          // Each position: 0 free, 1 up, 2 down, 3 both.
          std::vector<int> kind(static_cast<std::size_t>(len), 0);
          std::function<void(int, int)> rec = [&](int i, int used) {
            if (i == len) {
              if (used != n) return;
              std::vector<int> up, down, free;
              for (int q = 0; q < len; ++q) {
                if (kind[q] & 1) up.push_back(q + 1);
                if (kind[q] & 2) down.push_back(q + 1);
                if (kind[q] == 0) free.push_back(q + 1);
              }
              const PositionSet fs(free);
              auto emit = [&](const PositionSet& b) {
                const RegionSpec spec = RegionSpec::dented(family, x, y, PositionSet(up), PositionSet(down), b);
                if (valid(spec)) out.push_back(spec);
              };
              if (y == 0) {
                for (int b = 0; b <= std::min<int>(x, static_cast<int>(fs.size())); ++b)
                  each_subset(fs, b, emit);
              } else if (x <= static_cast<int>(fs.size())) {
                each_subset(fs, x, emit);
              }
              return;
            }
            if (len - i > n - used) {
              kind[i] = 0;
              rec(i + 1, used);
            }
            if (used < n) {
              for (int k = 1; k <= 3; ++k) {
                kind[i] = k;
                rec(i + 1, used + 1);
              }
            }
          };
          rec(0, 0);
        }
      }
    }
  }
  return out;
}

std::vector<FernCase> random_fern_cases(std::uint64_t seed, int budget) {
  std::vector<FernCase> out;
  Draw d(seed);
  while (static_cast<int>(out.size()) < budget) {
    ClusterSpec spec;
    spec.start = d.between(0, 2);
    const int k = d.between(1, 2);
    bool has_run = false;
    for (int i = 0; i < k; ++i) {
      Cluster c;
      c.size = d.between(2, 4);
      std::vector<int> up, down;
      int run = 0;
      int last = -1;
      for (int p = 1; p <= c.size; ++p) {
        const int kind = d.between(0, 1);
        run = kind == last ? run + 1 : 1;
        last = kind;
        if (run >= 2) has_run = true;
        (kind == 0 ? up : down).push_back(p);
      }
      c.up = PositionSet(up);
      c.down = PositionSet(down);
      spec.clusters.push_back(c);
      if (i + 1 < k) spec.gaps.push_back(d.between(1, 2));
    }
    if (!has_run) continue;
    const PlacedObstacles o = place(spec);
    const int n = static_cast<int>(o.up.united(o.down).size());
    const int last = std::max(o.up.empty() ? 0 : o.up.back(), o.down.empty() ? 0 : o.down.back());
    const int y = d.between(0, 2);
    const int x = std::max(d.between(0, 2), last - y - n);
    if (x + y + n > 10) continue;
    out.push_back(FernCase{spec, x, y});
  }
  return out;
}

std::vector<ProbeCase> probe_configurations(Family family) {
  if (!is_halved_family(family)) throw InvalidParameters("probes exist for F, Fbar, W, Wbar");
  auto cluster = [](int size, PositionSet up, PositionSet down) {
    return Cluster{std::move(up), std::move(down), {}, size};
  };
  auto spec = [](std::vector<Cluster> cs, std::vector<int> gaps) {
    return ClusterSpec{std::move(cs), std::move(gaps), 0};
  };
  std::vector<ProbeCase> out;
  // One cluster at the west end: the ratio is exact at every scale.
  out.push_back({spec({cluster(3, {1, 3}, {2})}, {}), spec({cluster(3, {2, 3}, {1})}, {}), 1, 1});
  // West cluster plus interior clusters with at most one triangle of each
  // orientation.
  out.push_back({spec({cluster(2, {1}, {2}), cluster(1, {1}, {})}, {1}),
                 spec({cluster(2, {2}, {1}), cluster(1, {1}, {})}, {1}), 1, 1});
  out.push_back({spec({cluster(3, {1, 2}, {3}), cluster(2, {2}, {1})}, {1}),
                 spec({cluster(3, {1, 3}, {2}), cluster(2, {1}, {2})}, {1}), 1, 1});
  out.push_back({spec({cluster(3, {2}, {1, 3}), cluster(1, {1}, {})}, {2}),
                 spec({cluster(3, {3}, {1, 2}), cluster(1, {1}, {})}, {2}), 1, 1});
  return out;
}

std::vector<OracleCase> random_oracle_cases(std::uint64_t seed, int budget, std::size_t max_cells) {
  std::vector<OracleCase> out;
  Draw d(seed);
  static constexpr Family kFamilies[] = {Family::Hex, Family::DentedSemihex, Family::H,  Family::F,
                                         Family::Fbar, Family::W,            Family::Wbar, Family::L,
                                         Family::Lbar, Family::P,            Family::Pprime};
  static const ExactRational kWeights[] = {fraction(1, 2), fraction(2, 1), fraction(3, 4), fraction(5, 3)};
  int turn = 0;
  while (static_cast<int>(out.size()) < budget) {
    const Family family = kFamilies[turn % std::size(kFamilies)];
    RegionSpec spec;
    switch (family) {
      case Family::Hex:
        spec = RegionSpec::hex(d.between(1, 3), d.between(1, 3), d.between(1, 3));
        break;
      case Family::DentedSemihex: {
        const int a = d.between(1, 3), b = d.between(0, 3);
        spec = RegionSpec::semihex(a, b, random_subset(d, PositionSet(iota_vec(1, a + b)), a));
        break;
      }
      case Family::L:
      case Family::Lbar: {
        const int m = d.between(1, 5), n = d.between(1, 4), k = (m + 1) / 2;
        spec = RegionSpec::quartered(family, m, n, random_subset(d, PositionSet(iota_vec(1, n + k)), k));
        break;
      }
      case Family::P:
      case Family::Pprime: {
        const int a = d.between(0, 2);
        spec = RegionSpec::cut_hex(family, a, d.between(a, 3), d.between(1, 3));
        break;
      }
      default: {
        const int x = d.between(0, 2), y = d.between(0, 2), n = d.between(0, 3);
        const DentDraw dents = draw_dents(d, iota_vec(1, x + y + n), n);
        const PositionSet free = dents.up.united(dents.down).complement(x + y + n);
        spec = RegionSpec::dented(family, x, y, dents.up, dents.down, random_subset(d, free, d.between(0, x)));
      }
    }
    ++turn;
    if (!valid(spec)) continue;
    Region region = build_region(spec);
    if (region.size() > max_cells || region.empty()) continue;
    const DualGraph g = dual_graph(region);
    int barred = 0, weighted = 0;
    for (const auto& e : g.edges) {
      if (d.chance(12)) {
        region = region.with_barrier(e.key());
        ++barred;
      } else if (d.chance(8)) {
        region = region.with_weight(e.key(), kWeights[d.between(0, 3)]);
        ++weighted;
      }
    }
    out.push_back(OracleCase{region, describe(spec) + " +" + std::to_string(barred) + " barred +" +
                                         std::to_string(weighted) + " reweighted"});
  }
  return out;
}

std::vector<RegionSpec> reflective_sweep(int max_full) {
  std::vector<RegionSpec> out;
  for (int x = 0; x <= max_full; x += 2) {
    for (int y = 0; x + y <= max_full; ++y) {
      for (int n = 0; x + y + 2 * n <= max_full; ++n) {
        const int full = x + y + 2 * n;
        const int half = (full + 1) / 2;
        const int slots = full % 2 == 1 ? half - 1 : half;
        if (slots < n) continue;
        // Each slot: 0 free, 1 up, 2 down, 3 both, 4 barrier.
        std::vector<int> kind(static_cast<std::size_t>(half), 0);
        std::function<void(int, int, int)> rec = [&](int i, int used, int barriers) {
          if (i == half) {
            if (used != n) return;
            std::vector<int> up, down, bar;
            for (int q = 0; q < half; ++q) {
              if (kind[q] == 1 || kind[q] == 3) up.push_back(q + 1);
              if (kind[q] == 2 || kind[q] == 3) down.push_back(q + 1);
              if (kind[q] == 4) bar.push_back(q + 1);
            }
            const RegionSpec spec =
                RegionSpec::dented(Family::RS, x, y, PositionSet(up), PositionSet(down), PositionSet(bar));
            if (valid(spec)) out.push_back(spec);
            return;
          }
          const bool centre = full % 2 == 1 && i == half - 1;
          for (int k = 0; k <= 4; ++k) {
            if (k >= 1 && k <= 3 && (centre || used == n)) continue;
            if (k == 4 && barriers == x / 2) continue;
            kind[i] = k;
            rec(i + 1, used + (k >= 1 && k <= 3 ? 1 : 0), barriers + (k == 4 ? 1 : 0));
          }
          kind[i] = 0;
        };
        rec(0, 0, 0);
      }
    }
  }
  return out;
}

void write_reports_jsonl(std::ostream& out, const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["inputs"] = r.inputs;
    j["lhs"] = to_string(r.lhs);
    j["rhs"] = to_string(r.rhs);
    j["verdict"] = std::string(verdict_name(r.verdict));
    j["pass"] = r.pass();
    j["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
    if (!r.note.empty()) j["note"] = r.note;
    out << j.dump() << '\n';
  }
}

std::string summary_table(const std::vector<VerificationReport>& reports) {
  struct Row {
    int total = 0, pass = 0, fail = 0, vacuous = 0, skipped = 0;
    double ms = 0;
  };
  std::map<std::string, Row> rows;
  std::vector<std::string> order;
  for (const auto& r : reports) {
    if (!rows.count(r.check)) order.push_back(r.check);
    Row& row = rows[r.check];
    ++row.total;
    switch (r.verdict) {
      case Verdict::Pass:
        ++row.pass;
        break;
      case Verdict::Fail:
        ++row.fail;
        break;
      case Verdict::Vacuous:
        ++row.vacuous;
        break;
      case Verdict::Skipped:
        ++row.skipped;
        break;
    }
    row.ms += std::chrono::duration<double, std::milli>(r.elapsed).count();
  }
  std::ostringstream os;
  os << std::left << std::setw(15) << "check" << std::right << std::setw(7) << "cases" << std::setw(7)
     << "pass" << std::setw(7) << "fail" << std::setw(9) << "vacuous" << std::setw(9) << "skipped"
     << std::setw(12) << "time_ms" << '\n';
  for (const auto& name : order) {
    const Row& row = rows[name];
    os << std::left << std::setw(15) << name << std::right << std::setw(7) << row.total << std::setw(7)
       << row.pass << std::setw(7) << row.fail << std::setw(9) << row.vacuous << std::setw(9)
       << row.skipped << std::setw(12) << std::fixed << std::setprecision(1) << row.ms << '\n';
  }
  return os.str();
}

}  // namespace lozenge
