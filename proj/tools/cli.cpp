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

#include "cli.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lcasched/baselines.hpp"
#include "lcasched/errors.hpp"
#include "lcasched/experiment.hpp"
#include "lcasched/lca.hpp"
#include "lcasched/model.hpp"
#include "lcasched/workload.hpp"

namespace lcasched::cli {

namespace {

// File-level failure: unreadable input, unwritable output, bad contents.
struct InputFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputFailure("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputFailure("cannot open '" + path + "' for writing");
  return out;
}

std::string fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

struct GenerateArgs {
  std::size_t n = 0;
  double min_mi = 200.0;
  double max_mi = 500.0;
  std::uint64_t seed = 0;
  std::string out;
};

struct ScheduleArgs {
  std::string trace;
  std::size_t vms = 0;
  double vm_mips = 1000.0;
  std::string algo;
  std::uint64_t seed = 0;
  bool json = false;
};

struct BenchArgs {
  std::string config;
  std::string out;
  std::string svg;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> threads;
  bool timing = false;
};

struct PlotArgs {
  std::string csv;
  std::string out;
};

int run_generate(const GenerateArgs& a, std::ostream& out) {
  const WorkloadSpec spec{a.n, a.min_mi, a.max_mi, a.seed};
  validate(spec);
  const auto tasks = generate_synthetic(spec);
  if (a.out.empty()) {
    write_trace(tasks, out);
  } else {
    auto file = open_out(a.out);
    write_trace(tasks, file);
    out << "wrote " << tasks.size() << " tasks to " << a.out << '\n';
  }
  return kExitOk;
}

int run_schedule(const ScheduleArgs& a, std::ostream& out) {
  if (a.vms < 1) throw InvalidParameter("--vms must be at least 1");
  if (!(a.vm_mips > 0.0)) throw InvalidParameter("--vm-mips must be positive");

  std::vector<Task> tasks;
  {
    auto in = open_in(a.trace);
    tasks = load_trace(in);
  }
  if (tasks.empty()) throw InputFailure("trace '" + a.trace + "' contains no tasks");
  const ProblemInstance instance = make_instance(std::move(tasks), a.vms, a.vm_mips);
  const SchedulerKind kind = *parse_scheduler(a.algo);

  std::optional<std::uint64_t> evaluations;
  Assignment assignment;
  if (kind == SchedulerKind::LCA) {
    LcaParams params;
    params.seed = a.seed;
    LcaResult result = run(params, instance);
    evaluations = result.evaluations;
    assignment = std::move(result.assignment);
  } else {
    assignment = run_baseline(kind, instance);
  }
  const ScheduleResult schedule = makespan(instance, assignment);

  if (a.json) {
    nlohmann::json doc;
    doc["algorithm"] = to_string(kind);
    doc["n_tasks"] = instance.task_count();
    doc["n_vms"] = instance.vm_count();
    doc["makespan_s"] = schedule.makespan_s;
    doc["vm_load_s"] = schedule.vm_load_s;
    doc["vm_of"] = schedule.assignment.vm_of;
    if (evaluations) doc["evaluations"] = *evaluations;
    out << doc.dump(2) << '\n';
  } else {
    out << "algorithm: " << to_string(kind) << '\n'
        << "tasks: " << instance.task_count() << ", vms: " << instance.vm_count() << '\n'
        << "makespan_s: " << fixed6(schedule.makespan_s) << '\n';
  }
  return kExitOk;
}

void print_summary(const Aggregate& agg, std::ostream& out) {
  out << "n_tasks";
  for (const SchedulerSummary& s : agg.summary) out << '\t' << to_string(s.scheduler);
  out << '\n';
  for (std::size_t n : agg.task_counts()) {
    out << n;
    for (const SchedulerSummary& s : agg.summary) {
      const CellStats* c = agg.cell(s.scheduler, n);
      out << '\t' << (c ? fixed6(c->mean_s) : std::string("-"));
    }
    out << '\n';
  }
  out << "mean";
  for (const SchedulerSummary& s : agg.summary) out << '\t' << fixed6(s.grand_mean_s);
  out << '\n';
}

int run_bench(const BenchArgs& a, std::ostream& out) {
  ExperimentConfig config;
  if (!a.config.empty()) {
    auto in = open_in(a.config);
    try {
      config = load_config(in);
    } catch (const InvalidParameter& e) {
      throw InputFailure("config '" + a.config + "': " + e.what());
    }
  }
  if (a.seed) config.master_seed = *a.seed;
  if (a.threads) config.threads = *a.threads;
  if (a.timing) config.measure_wall_time = true;

  const auto records = run_experiment(config);
  if (!a.out.empty()) {
    auto file = open_out(a.out);
    emit_csv(records, file);
  }
  const Aggregate agg = aggregate(records);
  if (!a.svg.empty()) {
    auto file = open_out(a.svg);
    emit_svg_chart(agg, file);
  }
  print_summary(agg, out);
  return kExitOk;
}

int run_plot(const PlotArgs& a, std::ostream& out) {
  std::vector<ExperimentRecord> records;
  {
    auto in = open_in(a.csv);
    records = parse_csv(in);
  }
  if (records.empty()) throw InputFailure("CSV '" + a.csv + "' has no records");
  const Aggregate agg = aggregate(records);
  auto file = open_out(a.out);
  emit_svg_chart(agg, file);
  print_summary(agg, out);
  return kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Makespan scheduling with the League Championship Algorithm", "lcasched"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a synthetic task trace");
  generate->add_option("--n", gen.n, "Number of tasks")->required()->check(CLI::PositiveNumber);
  generate->add_option("--min-mi", gen.min_mi, "Shortest task length (MI)")->capture_default_str();
  generate->add_option("--max-mi", gen.max_mi, "Longest task length (MI)")->capture_default_str();
  generate->add_option("--seed", gen.seed, "PRNG seed")->required();
  generate->add_option("--out", gen.out, "Trace path (default: standard output)");

  ScheduleArgs sched;
  auto* schedule = app.add_subcommand("schedule", "Schedule a trace and report its makespan");
  schedule->add_option("--trace", sched.trace, "Trace file (task_id,length_mi)")->required();
  schedule->add_option("--vms", sched.vms, "Number of VMs")->required();
  schedule->add_option("--vm-mips", sched.vm_mips, "Speed of every VM (MIPS)")
      ->capture_default_str();
  schedule->add_option("--algo", sched.algo, "Scheduler")
      ->required()
      ->check(CLI::IsMember({"fcfs", "ljf", "bef", "lca"}, CLI::ignore_case));
  schedule->add_option("--seed", sched.seed, "LCA search seed")->capture_default_str();
  schedule->add_flag("--json", sched.json, "Machine-readable output");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Run the scheduler comparison grid");
  bench->add_option("--config", bench_args.config, "Experiment config (JSON)");
  bench->add_option("--out", bench_args.out, "CSV output path");
  bench->add_option("--svg", bench_args.svg, "SVG chart output path");
  bench->add_option("--seed", bench_args.seed, "Master seed (overrides config)");
  bench->add_option("--threads", bench_args.threads, "Worker threads (0: all cores)");
  bench->add_flag("--timing", bench_args.timing, "Record wall-clock time per record");

  PlotArgs plot_args;
  auto* plot = app.add_subcommand("plot", "Render an SVG chart from a bench CSV");
  plot->add_option("--csv", plot_args.csv, "Bench CSV")->required();
  plot->add_option("--out", plot_args.out, "SVG output path")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("lcasched");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*generate) return run_generate(gen, out);
    if (*schedule) return run_schedule(sched, out);
    if (*bench) return run_bench(bench_args, out);
    if (*plot) return run_plot(plot_args, out);
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    // Unreadable files, malformed traces/configs/CSVs, failed writes.
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitUsage;
}

}  // namespace lcasched::cli
