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

#include "lcasched/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <string>
#include <thread>
#include <tuple>

#include "lcasched/errors.hpp"
#include "lcasched/rng.hpp"
#include "lcasched/workload.hpp"

namespace lcasched {

void validate(const ExperimentConfig& config) {
  if (config.repetitions < 1) {
    throw InvalidParameter("repetitions must be at least 1");
  }
  if (config.task_counts.empty()) {
    throw InvalidParameter("task_counts must not be empty");
  }
  for (std::size_t n : config.task_counts) {
    if (n < 1) throw InvalidParameter("task_counts entries must be positive");
  }
  if (config.n_vms < 1) {
    throw InvalidParameter("n_vms must be at least 1");
  }
  if (config.vm_speed_mips.size() != 1 && config.vm_speed_mips.size() != config.n_vms) {
    throw InvalidParameter("vm_speed_mips needs one value or one per VM");
  }
  for (double s : config.vm_speed_mips) {
    if (!(s > 0.0)) throw InvalidParameter("vm_speed_mips entries must be positive");
  }
  if (config.schedulers.empty()) {
    throw InvalidParameter("schedulers must not be empty");
  }
  for (std::size_t i = 0; i < config.schedulers.size(); ++i) {
    for (std::size_t j = i + 1; j < config.schedulers.size(); ++j) {
      if (config.schedulers[i] == config.schedulers[j]) {
        throw InvalidParameter("scheduler listed twice: " +
                               std::string(to_string(config.schedulers[i])));
      }
    }
  }
  validate(WorkloadSpec{1, config.length_min_mi, config.length_max_mi, 0});
  validate(config.lca_params);
}

std::uint64_t derive_cell_seed(std::uint64_t master_seed, std::size_t n_tasks, std::size_t rep) {
  return mix64(master_seed ^ (static_cast<std::uint64_t>(n_tasks) << 20) ^
               static_cast<std::uint64_t>(rep));
}

std::uint64_t derive_search_seed(std::uint64_t cell_seed, SchedulerKind kind) {
  return mix64(cell_seed ^ code(kind));
}

ProblemInstance cell_instance(const ExperimentConfig& config, std::size_t n_tasks,
                              std::size_t rep) {
  const WorkloadSpec spec{n_tasks, config.length_min_mi, config.length_max_mi,
                          derive_cell_seed(config.master_seed, n_tasks, rep)};
  std::vector<double> speeds = config.vm_speed_mips;
  if (speeds.size() == 1) speeds.assign(config.n_vms, speeds.front());
  return make_instance(generate_synthetic(spec), speeds);
}

void sort_canonical(std::vector<ExperimentRecord>& records) {
  std::stable_sort(records.begin(), records.end(),
                   [](const ExperimentRecord& a, const ExperimentRecord& b) {
                     return std::tuple(code(a.scheduler), a.n_tasks, a.rep) <
                            std::tuple(code(b.scheduler), b.n_tasks, b.rep);
                   });
}

namespace {

struct Cell {
  std::size_t n_tasks;
  std::size_t rep;
};

std::vector<ExperimentRecord> run_cell(const ExperimentConfig& config, const Cell& cell,
                                       const CellObserver& observer, std::mutex& observer_mutex) {
  using Clock = std::chrono::steady_clock;
  const ProblemInstance instance = cell_instance(config, cell.n_tasks, cell.rep);
  const std::uint64_t seed = derive_cell_seed(config.master_seed, cell.n_tasks, cell.rep);

  std::vector<ExperimentRecord> out;
  out.reserve(config.schedulers.size());
  for (SchedulerKind kind : config.schedulers) {
    ExperimentRecord record{kind, cell.n_tasks, cell.rep, seed, 0.0, 0, 0};
    std::optional<LcaResult> lca;

    const auto start = Clock::now();
    if (kind == SchedulerKind::LCA) {
      LcaParams params = config.lca_params;
      params.seed = derive_search_seed(seed, kind);
      lca = run(params, instance);
      record.makespan_s = lca->makespan_s;
      record.fitness_evaluations = lca->evaluations;
    } else {
      record.makespan_s = makespan(instance, run_baseline(kind, instance)).makespan_s;
    }
    if (config.measure_wall_time) {
      record.wall_time_ms = static_cast<std::uint64_t>(
          std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
    }

    if (observer) {
      std::lock_guard lock(observer_mutex);
      observer(CellEvent{kind, cell.n_tasks, cell.rep, instance, record,
                         lca ? &*lca : nullptr});
    }
    out.push_back(record);
  }
  return out;
}

}  // namespace

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& config,
                                             const CellObserver& observer) {
  validate(config);

  std::vector<Cell> cells;
  for (std::size_t n : config.task_counts) {
    for (std::size_t rep = 0; rep < config.repetitions; ++rep) cells.push_back({n, rep});
  }

  std::vector<std::vector<ExperimentRecord>> per_cell(cells.size());
  std::mutex observer_mutex;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        per_cell[i] = run_cell(config, cells[i], observer, observer_mutex);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = cells.size();
      }
    }
  };

  std::size_t threads = config.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, cells.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<ExperimentRecord> records;
  records.reserve(cells.size() * config.schedulers.size());
  for (auto& batch : per_cell) {
    records.insert(records.end(), batch.begin(), batch.end());
  }
  sort_canonical(records);
  return records;
}

}  // namespace lcasched
