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

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lozenge/formulas.hpp"
#include "lozenge/positions.hpp"
#include "lozenge/rational.hpp"
#include "lozenge/region.hpp"
#include "lozenge/region_spec.hpp"

namespace lozenge {

enum class Verdict {
  Pass,     // lhs == rhs exactly, or a probe whose trend is consistent
  Fail,
  Vacuous,  // a ratio whose denominator region has no tiling
  Skipped,  // beyond an enumeration cap
};

std::string_view verdict_name(Verdict verdict);

struct VerificationReport {
  std::string check;   // shuffling, kuo, base, decomposition, fern, asymptotic, reflective, oracle
  std::string inputs;  // compact description of the case
  ExactRational lhs;
  ExactRational rhs;
  Verdict verdict = Verdict::Fail;
  std::chrono::nanoseconds elapsed{0};
  std::string note;

  bool pass() const { return verdict == Verdict::Pass; }
  bool failed() const { return verdict == Verdict::Fail; }
};

// One ratio check: the shuffle, the x side length and a barrier set.
struct ShuffleCase {
  RatioSpec ratio;
  int x = 0;
  PositionSet barriers;
  bool operator==(const ShuffleCase&) const = default;
};

// Family of the counted regions for a ratio family (RS-odd, RS-even -> RS).
Family region_family(RatioFamily family);

// The two regions compared by a shuffle case.
RegionSpec numerator_spec(const ShuffleCase& c);
RegionSpec denominator_spec(const ShuffleCase& c);

// RS ratios take positions measured from the symmetry axis; other families
// are returned unchanged.
RatioSpec axis_relative(const ShuffleCase& c);

// lhs = M(U;D;B) / M(U';D';B) by exact counting (symmetric tilings for RS),
// rhs = shuffle_ratio. A zero denominator makes the report vacuous.
VerificationReport check_shuffling(const ShuffleCase& c);

// Condensation identity for a halved-hexagon spec (F, Fbar, W, Wbar), with
// alpha, beta the extreme free positions.
VerificationReport check_kuo_recurrence(const RegionSpec& spec);

// y = 0 or x = |B|: the halved hexagon splits along its dent axis into two
// quartered hexagons. rhs multiplies the two quartered counts, each computed
// by the sweep and cross-checked against its closed form.
VerificationReport check_base_cases(const RegionSpec& spec);

// Halved hexagon as a sum over the y free positions S carrying vertical
// lozenges across the dent axis: sum_S M(upper(U u S)) * M(lower(D u S)).
VerificationReport check_decomposition(const RegionSpec& spec);

// Obstacles grouped into contiguous clusters. Positions inside a cluster are
// relative (1-based); cluster i starts `gaps[i-1]` positions after cluster
// i-1 ends, and the first cluster starts at position `start + 1`.
struct Cluster {
  PositionSet up;
  PositionSet down;
  PositionSet barriers;
  int size = 0;  // f_i: number of positions the cluster spans
  bool operator==(const Cluster&) const = default;
};

struct ClusterSpec {
  std::vector<Cluster> clusters;
  std::vector<int> gaps;
  int start = 0;
  bool operator==(const ClusterSpec&) const = default;
};

void validate(const ClusterSpec& spec);

struct PlacedObstacles {
  PositionSet up;
  PositionSet down;
  PositionSet barriers;
};

// Absolute positions with every gap multiplied by `scale`.
PlacedObstacles place(const ClusterSpec& spec, int scale = 1);

// Count equality between F_{x,y}(clusters) and the region left after
// removing its forced lozenges (times the forced weight product).
VerificationReport check_fern_reduction(const ClusterSpec& clusters, int x, int y);

struct ProbeResult {
  std::vector<ExactRational> ratios;      // r_N, N = 1..Nmax
  std::vector<ExactRational> deviations;  // |r_N - L|
  ExactRational limit;                    // L
  bool truncated = false;
};

// Ratio of F-family counts at scale N (x, y and gaps multiplied by N) for the
// original and shuffled clusters, against the product of quartered-hexagon
// counts of the clusters. Consistent iff the deviation at the last computed N
// is the minimum of the sequence. Stops early once a region exceeds
// `cell_cap` cells.
VerificationReport asymptotic_probe(const ClusterSpec& original, const ClusterSpec& shuffled,
                                    Family family, int x, int y, int n_max,
                                    std::size_t cell_cap = 4000, ProbeResult* detail = nullptr);

// The claimed limit: prod_i s(C_i) / s(C'_i) with the quartered family and
// parities of the theorem for `family`.
ExactRational asymptotic_limit(const ClusterSpec& original, const ClusterSpec& shuffled, Family family);

// Filter and Reduce counts of an RS spec; skipped above `cap` tilings.
VerificationReport check_reflective(const RegionSpec& rs, std::size_t cap = 5000);

// Sweep against the recursive oracle on one region.
VerificationReport check_oracle(const Region& region, const std::string& inputs);

// Deterministic generators. Every case satisfies the preconditions of its
// theorem; the envelope is x + y + n <= max_size.
std::vector<ShuffleCase> random_shuffle_cases(std::uint64_t seed, int budget,
                                              const std::vector<RatioFamily>& families,
                                              int barrier_sets = 3, int max_size = 8);
std::vector<RegionSpec> random_kuo_cases(std::uint64_t seed, int budget, int max_size = 8);
std::vector<RegionSpec> random_decomposition_cases(std::uint64_t seed, int budget, int max_size = 8);
std::vector<RegionSpec> base_case_sweep(int max_size);

struct FernCase {
  ClusterSpec clusters;
  int x = 0;
  int y = 0;
};
std::vector<FernCase> random_fern_cases(std::uint64_t seed, int budget);

struct ProbeCase {
  ClusterSpec original;
  ClusterSpec shuffled;
  int x = 0;
  int y = 0;
};
// Four toy configurations for a halved family: one single cluster at the
// west end, and three that add an interior cluster holding at most one up
// and one down triangle.
std::vector<ProbeCase> probe_configurations(Family family);

struct OracleCase {
  Region region;
  std::string inputs;
};
// Regions of at most `max_cells` cells across families, with extra random
// barriers and weights.
std::vector<OracleCase> random_oracle_cases(std::uint64_t seed, int budget, std::size_t max_cells = 60);

// RS specs with x + y + 2n <= max_full, every valid dent and barrier choice.
std::vector<RegionSpec> reflective_sweep(int max_full);

// JSON Lines: one object per report with check, inputs, lhs, rhs, verdict,
// elapsed_ms and note.
void write_reports_jsonl(std::ostream& out, const std::vector<VerificationReport>& reports);
std::string summary_table(const std::vector<VerificationReport>& reports);

}  // namespace lozenge
