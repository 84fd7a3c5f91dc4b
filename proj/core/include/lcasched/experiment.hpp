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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lcasched/baselines.hpp"
#include "lcasched/lca.hpp"
#include "lcasched/model.hpp"

namespace lcasched {

inline constexpr std::uint64_t kDefaultMasterSeed = 20151012;

/// Scheduler x task-count x repetition grid. Defaults reproduce the
/// published setup: 20..180 tasks in steps of 20, 20 VMs, 200-500 MI,
/// nine repetitions, all four schedulers.
struct ExperimentConfig {
  std::vector<std::size_t> task_counts = {20, 40, 60, 80, 100, 120, 140, 160, 180};
  std::size_t n_vms = 20;
  /// One entry means every VM runs at that speed; otherwise one per VM.
  std::vector<double> vm_speed_mips = {1000.0};
  double length_min_mi = 200.0;
  double length_max_mi = 500.0;
  std::size_t repetitions = 9;
  std::vector<SchedulerKind> schedulers = {kAllSchedulers.begin(), kAllSchedulers.end()};
  LcaParams lca_params;
  std::uint64_t master_seed = kDefaultMasterSeed;
  std::size_t threads = 0;  // 0: one per hardware thread
  bool measure_wall_time = false;
};

void validate(const ExperimentConfig& config);

/// Reads the snake_case JSON form of ExperimentConfig. Every key is optional;
/// unknown keys are rejected.
ExperimentConfig config_from_json(const nlohmann::json& doc);
ExperimentConfig load_config(std::istream& in);

struct ExperimentRecord {
  SchedulerKind scheduler = SchedulerKind::FCFS;
  std::size_t n_tasks = 0;
  std::size_t rep = 0;
  std::uint64_t cell_seed = 0;
  double makespan_s = 0.0;
  std::uint64_t fitness_evaluations = 0;
  std::uint64_t wall_time_ms = 0;

  friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

std::uint64_t derive_cell_seed(std::uint64_t master_seed, std::size_t n_tasks, std::size_t rep);
std::uint64_t derive_search_seed(std::uint64_t cell_seed, SchedulerKind kind);

/// The workload every scheduler in cell (n_tasks, rep) receives.
ProblemInstance cell_instance(const ExperimentConfig& config, std::size_t n_tasks,
                              std::size_t rep);

struct CellEvent {
  SchedulerKind scheduler;
  std::size_t n_tasks;
  std::size_t rep;
  const ProblemInstance& instance;
  const ExperimentRecord& record;
  const LcaResult* lca;  // null for baselines
};

/// Called once per record. Calls are serialized but may come from worker
/// threads and in any order.
using CellObserver = std::function<void(const CellEvent&)>;

/// Runs the grid; records come back in canonical (scheduler code, n_tasks,
/// rep) order whatever the thread count.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config,
                                             const CellObserver& observer = {});

void sort_canonical(std::vector<ExperimentRecord>& records);

struct CellStats {
  SchedulerKind scheduler;
  std::size_t n_tasks;
  std::size_t count;
  double mean_s;
  double stddev_s;  // population
};

struct SchedulerSummary {
  SchedulerKind scheduler;
  std::size_t count;
  double grand_mean_s;  // over every record of the scheduler
};

struct Aggregate {
  std::vector<CellStats> cells;           // sorted by (scheduler code, n_tasks)
  std::vector<SchedulerSummary> summary;  // sorted by scheduler code

  const CellStats* cell(SchedulerKind kind, std::size_t n_tasks) const;
  const SchedulerSummary* scheduler(SchedulerKind kind) const;
  std::vector<std::size_t> task_counts() const;
};

Aggregate aggregate(std::span<const ExperimentRecord> records);

inline constexpr std::string_view kCsvHeader = "scheduler,n_tasks,rep,seed,makespan_s,evals,wall_ms";

/// Canonically ordered CSV with LF endings and 6-decimal makespans.
/// Returns bytes written.
std::size_t emit_csv(std::span<const ExperimentRecord> records, std::ostream& sink);
std::vector<ExperimentRecord> parse_csv(std::istream& in);

/// Line chart of mean makespan against task count, one polyline per
/// scheduler, with axes and a legend. Returns bytes written.
std::size_t emit_svg_chart(const Aggregate& aggregate, std::ostream& sink);

}  // namespace lcasched
