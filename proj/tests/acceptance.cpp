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

// Acceptance run: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lozenge/count.hpp"
#include "lozenge/formulas.hpp"
#include "lozenge/regions.hpp"
#include "lozenge/verify.hpp"

namespace {

using namespace lozenge;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Every k-subset of [1, n].
std::vector<PositionSet> subsets(int n, int k) {
  std::vector<PositionSet> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == k) {
      out.emplace_back(cur);
      return;
    }
    for (int v = next; v <= n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

// Tallies a batch of reports; any failure fails the criterion.
struct Tally {
  int cases = 0, pass = 0, fail = 0, vacuous = 0, skipped = 0;
  std::string first_failure;

  void add(const VerificationReport& r) {
    ++cases;
    switch (r.verdict) {
      case Verdict::Pass: ++pass; break;
      case Verdict::Vacuous: ++vacuous; break;
      case Verdict::Skipped: ++skipped; break;
      case Verdict::Fail:
        if (fail++ == 0) first_failure = r.inputs + ": " + to_string(r.lhs) + " vs " + to_string(r.rhs);
        break;
    }
  }
  std::string summary() const {
    std::ostringstream os;
    os << pass << "/" << cases << " pass";
    if (vacuous) os << ", " << vacuous << " vacuous";
    if (skipped) os << ", " << skipped << " beyond cap";
    if (fail) os << ", " << fail << " FAIL (first: " << first_failure << ")";
    return os.str();
  }
};

Outcome equality_sweep(const std::vector<RegionSpec>& specs, const std::function<ExactRational(const RegionSpec&)>& expected) {
  int ok = 0;
  std::string first;
  for (const auto& s : specs) {
    const auto got = count_tilings(build_region(s));
    const auto want = expected(s);
    if (got == want) ++ok;
    else if (first.empty()) first = describe(s) + ": " + to_string(got) + " vs " + to_string(want);
  }
  Outcome o;
  o.pass = ok == static_cast<int>(specs.size()) && !specs.empty();
  o.detail = std::to_string(ok) + "/" + std::to_string(specs.size()) + " regions exact";
  if (!first.empty()) o.detail += " (first mismatch " + first + ")";
  return o;
}

Outcome hex_sweep() {
  std::vector<RegionSpec> specs;
  for (int a = 0; a <= 9; ++a)
    for (int b = 0; a + b <= 9; ++b)
      for (int c = 0; a + b + c <= 9; ++c) specs.push_back(RegionSpec::hex(a, b, c));
  return equality_sweep(specs, [](const RegionSpec& s) {
    const auto& p = s.hex_params();
    return pp(p.a, p.b, p.c);
  });
}

Outcome semihex_sweep() {
  std::vector<RegionSpec> specs;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 4; ++b)
      for (const auto& dents : subsets(a + b, a)) specs.push_back(RegionSpec::semihex(a, b, dents));
  return equality_sweep(specs, [](const RegionSpec& s) { return clp(s.semihex_params().dents); });
}

Outcome quartered_sweep() {
  std::vector<RegionSpec> specs;
  for (Family f : {Family::L, Family::Lbar})
    for (int k = 1; k <= 3; ++k)
      for (int n = 1; n <= 5; ++n)
        for (int m : {2 * k - 1, 2 * k})
          for (const auto& dents : subsets(n + k, k)) specs.push_back(RegionSpec::quartered(f, m, n, dents));
  return equality_sweep(specs, [](const RegionSpec& s) {
    const auto& p = s.quartered_params();
    return quartered_count(s.family, p.m, p.dents);
  });
}

Outcome cut_hex_sweep() {
  std::vector<RegionSpec> specs;
  for (Family f : {Family::P, Family::Pprime})
    for (int b = 0; b <= 3; ++b)
      for (int a = 0; a <= b; ++a)
        for (int c = 0; c <= 3; ++c) specs.push_back(RegionSpec::cut_hex(f, a, b, c));
  return equality_sweep(specs, [](const RegionSpec& s) {
    const auto& p = s.hex_params();
    return s.family == Family::P ? proctor(p.a, p.b, p.c) : ciucu(p.a, p.b, p.c);
  });
}

Outcome shuffling() {
  const std::vector<RatioFamily> families{RatioFamily::H, RatioFamily::RSOdd, RatioFamily::RSEven, RatioFamily::F,
                                          RatioFamily::Fbar, RatioFamily::W, RatioFamily::Wbar};
  const auto cases = random_shuffle_cases(20260101, 210, families, 3, 8);
  Tally t;
  std::set<RatioFamily> seen;
  bool grouped = cases.size() % 3 == 0;
  for (std::size_t g = 0; grouped && g < cases.size(); g += 3) {
    std::set<PositionSet> barriers;
    for (std::size_t i = g; i < g + 3; ++i) {
      grouped = grouped && cases[i].ratio == cases[g].ratio && cases[i].x == cases[g].x;
      barriers.insert(cases[i].barriers);
    }
    grouped = grouped && barriers.size() == 3;
  }
  for (const auto& c : cases) {
    seen.insert(c.ratio.family);
    t.add(check_shuffling(c));
  }
  Outcome o;
  o.pass = t.fail == 0 && t.cases - t.vacuous >= 200 && seen.size() == families.size() && grouped;
  o.detail = t.summary() + ", " + std::to_string(seen.size()) + " families, " +
             (grouped ? "3 distinct barrier sets per shuffle" : "barrier grouping broken");
  return o;
}

Outcome kuo() {
  Tally t;
  for (const auto& s : random_kuo_cases(20260102, 120, 8))
    if (s.family == Family::F || s.family == Family::Fbar) t.add(check_kuo_recurrence(s));
  return {t.fail == 0 && t.pass >= 50, t.summary() + " (F and Fbar)"};
}

Outcome base_cases() {
  Tally t;
  for (const auto& s : base_case_sweep(6)) t.add(check_base_cases(s));
  return {t.fail == 0 && t.pass > 0, t.summary() + " (F, Fbar, W, Wbar with x+y+n <= 6)"};
}

Outcome decomposition() {
  Tally t;
  for (const auto& s : random_decomposition_cases(20260103, 25, 8)) t.add(check_decomposition(s));
  return {t.fail == 0 && t.pass >= 20, t.summary()};
}

Outcome fern() {
  Tally t;
  for (const auto& f : random_fern_cases(20260104, 25)) t.add(check_fern_reduction(f.clusters, f.x, f.y));
  return {t.fail == 0 && t.pass >= 20, t.summary()};
}

Outcome reflective() {
  Tally t;
  for (const auto& s : reflective_sweep(8)) t.add(check_reflective(s, kDefaultTilingCap));
  return {t.fail == 0 && t.pass > 0, t.summary() + " (x+y+2n <= 8)"};
}

Outcome oracle() {
  Tally t;
  for (const auto& c : random_oracle_cases(20260105, 100, 60)) t.add(check_oracle(c.region, c.inputs));
  return {t.fail == 0 && t.pass == 100, t.summary()};
}

Outcome asymptotic() {
  Tally t;
  int exact_single = 0, singles = 0;
  for (Family f : {Family::F, Family::Fbar, Family::W, Family::Wbar}) {
    const auto probes = probe_configurations(f);
    for (const auto& p : probes) {
      ProbeResult detail;
      const auto r = asymptotic_probe(p.original, p.shuffled, f, p.x, p.y, 3, 4000, &detail);
      t.add(r);
      if (p.original.clusters.size() == 1) {
        ++singles;
        bool exact = detail.ratios.size() == 3;
        for (const auto& d : detail.deviations) exact = exact && d == 0;
        exact_single += exact ? 1 : 0;
      }
    }
  }
  return {t.fail == 0 && t.skipped == 0 && t.pass == 16 && exact_single == singles && singles > 0,
          t.summary() + ", minimum at N=3; " + std::to_string(exact_single) + "/" + std::to_string(singles) +
              " single-cluster probes exact"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"hexagon counts equal the box formula, a+b+c <= 9", hex_sweep},
      {"dented semihexagons equal the semihex product, a <= 3, b <= 4", semihex_sweep},
      {"quartered hexagons, four variants, k <= 3, n <= 5", quartered_sweep},
      {"cut hexagons P and Pprime, a <= b <= 3, c <= 3", cut_hex_sweep},
      {"shuffle ratios across seven families", shuffling},
      {"condensation recurrence", kuo},
      {"base-case factorization", base_cases},
      {"decomposition over free axis positions", decomposition},
      {"forced-lozenge reduction on clustered dents", fern},
      {"symmetric tilings: filter equals reduction", reflective},
      {"profile sweep equals recursive oracle", oracle},
      {"asymptotic probes", asymptotic},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1 < 10 ? " " : "") << i + 1 << "  " << criteria[i].first
              << ": " << o.detail << " [" << timing << "]" << std::endl;
    failed += o.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
