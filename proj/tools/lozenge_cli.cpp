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

#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "lozenge/count.hpp"
#include "lozenge/error.hpp"
#include "lozenge/regions.hpp"
#include "lozenge/render.hpp"
#include "lozenge/spec_io.hpp"
#include "lozenge/verify.hpp"

namespace {

using namespace lozenge;

// Exit codes.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;
constexpr int kCapHit = 3;

struct SpecSource {
  std::string file;
  std::string json;

  void attach(CLI::App* app, const std::string& what) {
    auto* f = app->add_option("--spec,-s", file, what + " file (JSON or JSON Lines, '-' for stdin)");
    auto* j = app->add_option("--json,-j", json, what + " as inline JSON");
    f->excludes(j);
  }

  template <class T>
  std::vector<T> load(std::vector<T> (*reader)(std::istream&, const std::string&)) const {
    if (!json.empty()) {
      std::istringstream in(json);
      return reader(in, "--json");
    }
    if (file.empty()) throw CLI::RequiredError("--spec or --json");
    if (file == "-") return reader(std::cin, "<stdin>");
    std::ifstream in(file);
    if (!in) throw SpecParseError(file, 0, "cannot open file");
    return reader(in, file);
  }
};

std::string ms(std::chrono::nanoseconds d) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << std::chrono::duration<double, std::milli>(d).count();
  return os.str();
}

void print_stats(std::ostream& os, const Region& r) {
  os << "  cells=" << r.size() << " up=" << r.up_count() << " down=" << r.down_count()
     << " barred=" << r.barred_edges().size() << " weighted=" << r.weight_overrides().size() << '\n';
}

// Runs jobs on `workers` threads; results keep job order.
std::vector<VerificationReport> run_jobs(const std::vector<std::function<VerificationReport()>>& jobs,
                                         unsigned workers) {
  std::vector<VerificationReport> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) out[i] = jobs[i]();
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t seed = 1;
  int budget = 0;  // 0: suite default
  int n_max = 3;
  int max_size = 8;
  int base_size = 6;
  int reflective_size = 8;
  std::size_t cap = kDefaultTilingCap;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string out;
};

const std::vector<std::string> kSuites = {"shuffling", "kuo",    "base",       "decomposition", "fern",
                                          "asymptotic", "reflective", "oracle", "all"};

std::vector<std::function<VerificationReport()>> suite_jobs(const std::string& suite, const VerifyOptions& o) {
  std::vector<std::function<VerificationReport()>> jobs;
  auto budget = [&](int fallback) { return o.budget > 0 ? o.budget : fallback; };
  const bool all = suite == "all";
  if (all || suite == "shuffling") {
    const std::vector<RatioFamily> families{RatioFamily::H, RatioFamily::RSOdd, RatioFamily::RSEven, RatioFamily::F,
                                            RatioFamily::Fbar, RatioFamily::W, RatioFamily::Wbar};
    for (auto& c : random_shuffle_cases(o.seed, budget(210), families, 3, o.max_size))
      jobs.push_back([c] { return check_shuffling(c); });
  }
  if (all || suite == "kuo")
    for (auto& s : random_kuo_cases(o.seed, budget(100), o.max_size))
      jobs.push_back([s] { return check_kuo_recurrence(s); });
  if (all || suite == "base")
    for (auto& s : base_case_sweep(o.base_size)) jobs.push_back([s] { return check_base_cases(s); });
  if (all || suite == "decomposition")
    for (auto& s : random_decomposition_cases(o.seed, budget(25), o.max_size))
      jobs.push_back([s] { return check_decomposition(s); });
  if (all || suite == "fern")
    for (auto& f : random_fern_cases(o.seed, budget(25)))
      jobs.push_back([f] { return check_fern_reduction(f.clusters, f.x, f.y); });
  if (all || suite == "asymptotic")
    for (Family family : {Family::F, Family::Fbar, Family::W, Family::Wbar})
      for (auto& p : probe_configurations(family))
        jobs.push_back([p, family, n = o.n_max] { return asymptotic_probe(p.original, p.shuffled, family, p.x, p.y, n); });
  if (all || suite == "reflective")
    for (auto& s : reflective_sweep(o.reflective_size))
      jobs.push_back([s, cap = o.cap] { return check_reflective(s, cap); });
  if (all || suite == "oracle")
    for (auto& c : random_oracle_cases(o.seed, budget(100)))
      jobs.push_back([c] { return check_oracle(c.region, c.inputs); });
  return jobs;
}

int run_verify(const VerifyOptions& o) {
  const auto reports = run_jobs(suite_jobs(o.suite, o), o.jobs);
  if (!o.out.empty()) {
    std::ofstream file(o.out);
    if (!file) {
      std::cerr << "error: cannot write " << o.out << '\n';
      return kBadInput;
    }
    write_reports_jsonl(file, reports);
  }
  std::cout << summary_table(reports);
  int failures = 0;
  for (const auto& r : reports) {
    if (!r.failed()) continue;
    ++failures;
    std::cout << "FAIL " << r.check << ' ' << r.inputs << ": " << to_string(r.lhs) << " != " << to_string(r.rhs);
    if (!r.note.empty()) std::cout << " (" << r.note << ')';
    std::cout << '\n';
  }
  return failures == 0 ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lozenge tiling counts and formula checks"};
  app.require_subcommand(1, 1);

  SpecSource count_src, sym_src, ratio_src, render_src;
  std::string count_method = "dp";
  auto* count = app.add_subcommand("count", "Weighted tiling count of each region spec");
  count_src.attach(count, "region spec");
  count->add_option("--method,-m", count_method, "dp, oracle or both")
      ->check(CLI::IsMember({"dp", "oracle", "both"}));

  std::size_t sym_cap = kDefaultTilingCap;
  auto* sym = app.add_subcommand("count-symmetric", "Symmetric tilings of RS specs by filtering and by reduction");
  sym_src.attach(sym, "RS spec");
  sym->add_option("--cap", sym_cap, "Tiling cap for the filter count")->capture_default_str();

  auto* ratio = app.add_subcommand("ratio", "Count ratio of a shuffle against its closed form");
  ratio_src.attach(ratio, "shuffle case");

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run a verification suite and write reports");
  verify->add_option("suite", vo.suite, "Suite name")->check(CLI::IsMember(kSuites))->capture_default_str();
  verify->add_option("--seed", vo.seed, "Generator seed")->capture_default_str();
  verify->add_option("--budget", vo.budget, "Cases per random suite (0: default)");
  verify->add_option("--nmax", vo.n_max, "Largest scale of the asymptotic probes")->capture_default_str()
      ->check(CLI::Range(1, 6));
  verify->add_option("--max-size", vo.max_size, "Envelope x+y+n of random cases")->capture_default_str()
      ->check(CLI::Range(1, 12));
  verify->add_option("--base-size", vo.base_size, "Envelope x+y+n of the base-case sweep")
      ->capture_default_str()->check(CLI::Range(0, 8));
  verify->add_option("--reflective-size", vo.reflective_size, "Envelope x+y+2n of the reflective sweep")
      ->capture_default_str()->check(CLI::Range(0, 10));
  verify->add_option("--cap", vo.cap, "Tiling cap for reflective filtering")->capture_default_str();
  verify->add_option("--jobs", vo.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  verify->add_option("--out,-o", vo.out, "JSON Lines report file");

  std::string format = "ascii";
  long tiling_index = -1;
  std::size_t render_cap = kDefaultTilingCap;
  std::string render_out;
  auto* render = app.add_subcommand("render", "Draw a region, or one of its tilings");
  render_src.attach(render, "region spec");
  render->add_option("--format,-f", format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}))
      ->capture_default_str();
  render->add_option("--tiling,-t", tiling_index, "Draw tiling #i (0-based, enumeration order)")
      ->check(CLI::NonNegativeNumber);
  render->add_option("--cap", render_cap, "Tiling cap for --tiling")->capture_default_str();
  render->add_option("--out,-o", render_out, "Output file (default stdout)");

  int bench_max = 6;
  auto* bench = app.add_subcommand("bench", "Time the sweep against the oracle on Hex(n,n,n)");
  bench->add_option("--max", bench_max, "Largest n")->capture_default_str()->check(CLI::Range(1, 12));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*count) {
      for (const auto& spec : count_src.load<RegionSpec>(read_region_specs)) {
        const Region region = build_region(spec);
        std::cout << describe(spec) << ": ";
        if (count_method == "oracle") {
          std::cout << to_string(count_tilings_oracle(region)) << '\n';
        } else {
          const auto value = count_tilings(region);
          std::cout << to_string(value) << '\n';
          if (count_method == "both") {
            const auto oracle = count_tilings_oracle(region);
            std::cout << "  oracle=" << to_string(oracle) << (oracle == value ? " (agrees)" : " (DISAGREES)") << '\n';
            if (oracle != value) return kCheckFailed;
          }
        }
        print_stats(std::cout, region);
      }
      return kOk;
    }
    if (*sym) {
      int status = kOk;
      for (const auto& spec : sym_src.load<RegionSpec>(read_region_specs)) {
        if (spec.family != Family::RS) throw InvalidParameters(describe(spec) + ": count-symmetric takes RS specs");
        const auto reduce = count_reflective(spec, ReflectiveMethod::Reduce);
        const auto filter = count_reflective(spec, ReflectiveMethod::Filter, sym_cap);
        std::cout << describe(spec) << ": filter=" << to_string(filter) << " reduce=" << to_string(reduce)
                  << (filter == reduce ? " agree" : " DISAGREE") << '\n';
        if (filter != reduce) status = kCheckFailed;
      }
      return status;
    }
    if (*ratio) {
      int status = kOk;
      for (const auto& c : ratio_src.load<ShuffleCase>(read_shuffle_cases)) {
        const auto r = check_shuffling(c);
        std::cout << r.inputs << '\n';
        if (r.verdict == Verdict::Vacuous)
          std::cout << "vacuous (" << r.note << "), predicted " << to_string(r.rhs) << '\n';
        else
          std::cout << to_string(r.lhs) << " = " << to_string(r.rhs) << ", " << verdict_name(r.verdict) << '\n';
        if (r.failed()) status = kCheckFailed;
      }
      return status;
    }
    if (*verify) return run_verify(vo);
    if (*render) {
      const auto specs = render_src.load<RegionSpec>(read_region_specs);
      if (specs.size() != 1) throw InvalidParameters("render takes exactly one region spec");
      const Region region = build_region(specs.front());
      std::optional<Tiling> tiling;
      if (tiling_index >= 0) {
        const auto all = enumerate_tilings(region, render_cap);
        if (static_cast<std::size_t>(tiling_index) >= all.size())
          throw InvalidParameters("region has " + std::to_string(all.size()) + " tilings; no tiling #" +
                                  std::to_string(tiling_index));
        tiling = all[static_cast<std::size_t>(tiling_index)];
      }
      const Tiling* t = tiling ? &*tiling : nullptr;
      const std::string text = format == "svg" ? render_svg(region, t) : render_ascii(region, t);
      if (render_out.empty()) {
        std::cout << text;
      } else {
        std::ofstream file(render_out, std::ios::binary);
        if (!file) throw SpecParseError(render_out, 0, "cannot write file");
        file << text;
      }
      return kOk;
    }
    if (*bench) {
      std::cout << std::left << std::setw(14) << "region" << std::right << std::setw(7) << "cells" << std::setw(16)
                << "count" << std::setw(12) << "dp_ms" << std::setw(12) << "oracle_ms" << '\n';
      for (int n = 1; n <= bench_max; ++n) {
        const RegionSpec spec = RegionSpec::hex(n, n, n);
        const Region region = build_region(spec);
        auto t0 = std::chrono::steady_clock::now();
        const auto value = count_tilings(region);
        const auto dp = std::chrono::steady_clock::now() - t0;
        std::string oracle = "-";
        if (region.size() <= kOracleCellCap) {
          t0 = std::chrono::steady_clock::now();
          count_tilings_oracle(region);
          oracle = ms(std::chrono::steady_clock::now() - t0);
        }
        std::cout << std::left << std::setw(14) << describe(spec) << std::right << std::setw(7) << region.size()
                  << std::setw(16) << to_string(value) << std::setw(12) << ms(dp) << std::setw(12) << oracle << '\n';
      }
      return kOk;
    }
  } catch (const SpecParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const InvalidParameters& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCapHit;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  }
  return kOk;
}
