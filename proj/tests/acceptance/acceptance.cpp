/*
 * Copyright 2026 The lcasched Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Thresholds are fixed here and never tuned at runtime.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "cli.hpp"
#include "lcasched/baselines.hpp"
#include "lcasched/experiment.hpp"
#include "lcasched/lca.hpp"
#include "lcasched/oracle.hpp"
#include "lcasched/workload.hpp"

using namespace lcasched;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

// 1. p_i + p_j == 1 and both in [0,1] for 10^4 random triples, < 1 s.
Verdict probability_normalization() {
  const auto start = Clock::now();
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> dist(0.0, 1000.0);
  double worst = 0.0;
  bool in_range = true;
  for (int t = 0; t < 10000; ++t) {
    const double f_i = dist(gen);
    const double f_j = dist(gen);
    const double f_hat = std::min(f_i, f_j) - dist(gen) * (t % 3 == 0 ? 0.0 : 1.0);
    const double p_i = win_probability(f_i, f_j, f_hat);
    const double p_j = win_probability(f_j, f_i, f_hat);
    worst = std::max(worst, std::abs(p_i + p_j - 1.0));
    in_range = in_range && p_i >= 0.0 && p_i <= 1.0 && p_j >= 0.0 && p_j <= 1.0;
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-12 && in_range && elapsed < 1.0,
          fmt("max |p_i+p_j-1| = %.3g, runtime %.3f s", worst, elapsed)};
}

// 2. Exact spot values of the win probability.
Verdict spot_values() {
  const bool ok = win_probability(6.0, 10.0, 4.0) == 0.75 &&
                  win_probability(10.0, 10.0, 4.0) == 0.5 &&
                  win_probability(4.0, 10.0, 4.0) == 1.0 &&
                  win_probability(4.0, 4.0, 4.0) == 0.5;
  return {ok, fmt("p(6,10,4) = %.17g, p(10,10,4) = %.17g, p(4,10,4) = %.17g",
                  win_probability(6.0, 10.0, 4.0), win_probability(10.0, 10.0, 4.0),
                  win_probability(4.0, 10.0, 4.0))};
}

// 3. Win frequency at p_i = 0.75 over 10^5 seeded matches within +-0.01.
Verdict match_frequency() {
  Team i;
  i.index = 0;
  i.current_fitness = 6.0;
  Team j;
  j.index = 1;
  j.current_fitness = 10.0;
  SplitMix64 rng(20240);
  int wins = 0;
  const int trials = 100000;
  for (int t = 0; t < trials; ++t) wins += play_match(i, j, 4.0, rng).winner == 0 ? 1 : 0;
  const double rate = static_cast<double>(wins) / trials;
  return {std::abs(rate - 0.75) <= 0.01, fmt("win rate %.5f (target 0.75 +- 0.01)", rate)};
}

// 4. Round-robin validity for L in {4, 6, 20}, every season rotation.
Verdict fixture_validity() {
  const auto start = Clock::now();
  bool ok = true;
  for (std::size_t l : {4u, 6u, 20u}) {
    for (std::size_t season = 1; season <= 2 * l; ++season) {
      const Fixtures fixtures = season_fixtures(l, season);
      ok = ok && fixtures.size() == l - 1;
      std::set<std::pair<std::size_t, std::size_t>> pairs;
      for (const Week& week : fixtures) {
        std::vector<int> plays(l, 0);
        ok = ok && week.size() == l / 2;
        for (const Match& m : week) {
          ok = ok && m.home < l && m.away < l && m.home != m.away;
          if (!ok) break;
          ok = ok && ++plays[m.home] == 1 && ++plays[m.away] == 1;
          pairs.insert(std::minmax(m.home, m.away));
        }
      }
      ok = ok && pairs.size() == l * (l - 1) / 2;
    }
  }
  const double elapsed = seconds_since(start);
  return {ok && elapsed < 1.0, fmt("L in {4,6,20}, all rotations checked, runtime %.3f s", elapsed)};
}

// 5. LCA vs exhaustive optimum on 50 instances (n=6, m=2 @1000 MIPS).
Verdict oracle_equivalence() {
  const auto start = Clock::now();
  int exact = 0;
  int within5 = 0;
  const int instances = 50;
  for (int s = 0; s < instances; ++s) {
    const auto seed = static_cast<std::uint64_t>(1000 + s);
    const auto inst = make_instance(generate_synthetic({6, 200.0, 500.0, seed}), 2, 1000.0);
    LcaParams params;
    params.league_size = 12;
    params.seasons = 60;
    params.seed = mix64(seed);
    const double found = run(params, inst).makespan_s;
    const double optimum = brute_force_optimum(inst).makespan_s;
    if (found <= optimum * (1.0 + 1e-12)) ++exact;
    if (found <= optimum * 1.05) ++within5;
  }
  const double elapsed = seconds_since(start);
  const bool ok = exact >= 45 && within5 == instances && elapsed < 30.0;
  return {ok, fmt("exact %.0f/50 (need >= 45), within 5%% %.0f/50, runtime %.2f s", exact,
                  within5, elapsed)};
}

struct GridRun {
  std::vector<ExperimentRecord> records;
  std::vector<std::vector<double>> lca_histories;
  double seconds = 0.0;
};

GridRun run_default_grid() {
  GridRun grid;
  const auto start = Clock::now();
  ExperimentConfig config;  // defaults: 20..180 step 20, 20 VMs @1000 MIPS, 9 reps
  grid.records = run_experiment(config, [&](const CellEvent& e) {
    if (e.lca) grid.lca_histories.push_back(e.lca->history);
  });
  grid.seconds = seconds_since(start);
  return grid;
}

// 6. Ordering of the published comparison on the default grid.
Verdict figure_ordering(const GridRun& grid) {
  const Aggregate agg = aggregate(grid.records);
  const auto counts = agg.task_counts();
  bool a = true, b = true;
  std::string failures;
  for (std::size_t n : counts) {
    const double lca = agg.cell(SchedulerKind::LCA, n)->mean_s;
    for (SchedulerKind k : {SchedulerKind::FCFS, SchedulerKind::LJF, SchedulerKind::BEF}) {
      if (!(lca <= agg.cell(k, n)->mean_s)) {
        a = false;
        failures += " (a)@" + std::to_string(n);
      }
    }
    if (!(lca < agg.cell(SchedulerKind::FCFS, n)->mean_s)) {
      b = false;
      failures += " (b)@" + std::to_string(n);
    }
  }
  const double lca = agg.scheduler(SchedulerKind::LCA)->grand_mean_s;
  const double fcfs_mean = agg.scheduler(SchedulerKind::FCFS)->grand_mean_s;
  const double ljf_mean = agg.scheduler(SchedulerKind::LJF)->grand_mean_s;
  const double bef_mean = agg.scheduler(SchedulerKind::BEF)->grand_mean_s;
  const bool c = lca < fcfs_mean && lca < ljf_mean && lca < bef_mean;
  const bool d = fcfs_mean > ljf_mean && fcfs_mean > bef_mean && fcfs_mean > lca;
  const bool fast = grid.seconds < 300.0;
  std::string detail =
      fmt("grand means FCFS %.4f LJF %.4f BEF %.4f", fcfs_mean, ljf_mean, bef_mean) +
      fmt(" LCA %.4f s; %.0f task counts; runtime %.1f s", lca,
          static_cast<double>(counts.size()), grid.seconds);
  if (!failures.empty()) detail += "; failed:" + failures;
  if (!c) detail += "; (c) failed";
  if (!d) detail += "; (d) failed";
  return {a && b && c && d && fast, detail};
}

// 7. Scaling task lengths by 3 scales every scheduler's makespan by 3.
Verdict homogeneity() {
  std::mt19937_64 gen(7);
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 5 + gen() % 60;
    const std::size_t m = 2 + gen() % 10;
    auto tasks = generate_synthetic({n, 200.0, 500.0, gen()});
    auto scaled = tasks;
    for (Task& task : scaled) task.length_mi *= 3.0;
    const auto base = make_instance(tasks, m, 1000.0);
    const auto big = make_instance(scaled, m, 1000.0);

    LcaParams params;
    params.league_size = 10;
    params.seasons = 10;
    params.seed = gen();
    std::vector<std::pair<double, double>> pairs = {
        {makespan(base, fcfs(base)).makespan_s, makespan(big, fcfs(big)).makespan_s},
        {makespan(base, ljf(base)).makespan_s, makespan(big, ljf(big)).makespan_s},
        {makespan(base, bef(base)).makespan_s, makespan(big, bef(big)).makespan_s},
        {run(params, base).makespan_s, run(params, big).makespan_s}};
    for (const auto& [x, y] : pairs) worst = std::max(worst, std::abs(y - 3.0 * x) / (3.0 * x));
  }
  return {worst <= 1e-9, fmt("max relative deviation %.3g over 20 instances x 4 schedulers", worst)};
}

// 8. Two bench runs with one master seed give byte-identical CSV files.
Verdict bench_determinism() {
  const fs::path dir = fs::temp_directory_path() /
                       ("lcasched_acceptance_" + std::to_string(std::random_device{}()));
  fs::create_directories(dir);
  const std::string first = (dir / "first.csv").string();
  const std::string second = (dir / "second.csv").string();
  std::ostringstream sink;
  const int c1 = cli::dispatch({"lcasched", "bench", "--seed", "424242", "--out", first}, sink, sink);
  const int c2 = cli::dispatch({"lcasched", "bench", "--seed", "424242", "--out", second}, sink, sink);

  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  };
  const std::string a = slurp(first);
  const std::string b = slurp(second);
  fs::remove_all(dir);
  const auto lines = std::count(a.begin(), a.end(), '\n');
  const bool ok = c1 == 0 && c2 == 0 && !a.empty() && a == b && lines == 325;
  return {ok, fmt("exit codes %.0f/%.0f, %.0f CSV lines, identical bytes", c1, c2, lines) +
                  (a == b ? "" : " -- MISMATCH")};
}

// 9. Global-best history never increases in any LCA run of the grid.
Verdict history_monotone(const GridRun& grid) {
  std::size_t violations = 0;
  std::size_t weeks = 0;
  for (const auto& history : grid.lca_histories) {
    weeks += history.size();
    for (std::size_t w = 1; w < history.size(); ++w) {
      if (history[w] > history[w - 1]) ++violations;
    }
  }
  const bool ok = violations == 0 && grid.lca_histories.size() == 81;
  return {ok, fmt("%.0f LCA runs, %.0f weeks, %.0f increases",
                  static_cast<double>(grid.lca_histories.size()), static_cast<double>(weeks),
                  static_cast<double>(violations))};
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int id, const char* name, const Verdict& v) {
    std::printf("[%s] AC%d %s: %s\n", v.pass ? "PASS" : "FAIL", id, name, v.detail.c_str());
    std::fflush(stdout);
    if (!v.pass) ++failed;
  };

  report(1, "probability normalization", probability_normalization());
  report(2, "win probability spot values", spot_values());
  report(3, "Monte Carlo match frequency", match_frequency());
  report(4, "fixture validity", fixture_validity());
  report(5, "oracle equivalence", oracle_equivalence());
  const GridRun grid = run_default_grid();
  report(6, "scheduler ordering on the default grid", figure_ordering(grid));
  report(7, "makespan homogeneity", homogeneity());
  report(8, "bench determinism", bench_determinism());
  report(9, "best-so-far monotonicity", history_monotone(grid));

  std::printf("%s: %d of 9 criteria failed\n", failed ? "FAILED" : "OK", failed);
  return failed ? 1 : 0;
}
