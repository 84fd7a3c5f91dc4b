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

#include "lcasched/baselines.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>

#include "lcasched/errors.hpp"

namespace lcasched {

std::string_view to_string(SchedulerKind kind) noexcept {
  switch (kind) {
    case SchedulerKind::FCFS: return "fcfs";
    case SchedulerKind::LJF: return "ljf";
    case SchedulerKind::BEF: return "bef";
    case SchedulerKind::LCA: return "lca";
  }
  return "unknown";
}

std::optional<SchedulerKind> parse_scheduler(std::string_view name) noexcept {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (SchedulerKind kind : kAllSchedulers) {
    if (lower == to_string(kind)) return kind;
  }
  return std::nullopt;
}

namespace {

// Core shared by every baseline. `order` lists instance positions in the
// sequence they are dispatched; the result is indexed by instance position.
Assignment dispatch_in_order(const ProblemInstance& instance, std::span<const std::size_t> order) {
  if (instance.vms.empty()) {
    throw InvalidInstance("empty VM list");
  }
  std::vector<double> load(instance.vms.size(), 0.0);
  Assignment assignment;
  assignment.vm_of.assign(instance.tasks.size(), 0);

  for (std::size_t k : order) {
    // min_element returns the first minimum: lowest index wins ties.
    const auto it = std::min_element(load.begin(), load.end());
    const auto v = static_cast<std::size_t>(it - load.begin());
    *it += instance.tasks[k].length_mi / instance.vms[v].speed_mips;
    assignment.vm_of[k] = v;
  }
  return assignment;
}

template <typename Less>
Assignment sorted_dispatch(const ProblemInstance& instance, Less less) {
  require_valid(instance);
  std::vector<std::size_t> order = arrival_order(instance);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return less(instance.tasks[a], instance.tasks[b]);
  });
  return dispatch_in_order(instance, order);
}

}  // namespace

Assignment greedy_earliest_vm(std::span<const Task> ordered_tasks,
                              std::span<const VirtualMachine> vms) {
  if (vms.empty()) {
    throw InvalidInstance("empty VM list");
  }
  ProblemInstance view;
  view.tasks.assign(ordered_tasks.begin(), ordered_tasks.end());
  view.vms.assign(vms.begin(), vms.end());
  std::vector<std::size_t> order(view.tasks.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return dispatch_in_order(view, order);
}

Assignment fcfs(const ProblemInstance& instance) {
  return sorted_dispatch(instance, [](const Task&, const Task&) { return false; });
}

Assignment ljf(const ProblemInstance& instance) {
  return sorted_dispatch(instance,
                         [](const Task& a, const Task& b) { return a.length_mi > b.length_mi; });
}

Assignment bef(const ProblemInstance& instance) {
  return sorted_dispatch(instance,
                         [](const Task& a, const Task& b) { return a.length_mi < b.length_mi; });
}

Assignment run_baseline(SchedulerKind kind, const ProblemInstance& instance) {
  switch (kind) {
    case SchedulerKind::FCFS: return fcfs(instance);
    case SchedulerKind::LJF: return ljf(instance);
    case SchedulerKind::BEF: return bef(instance);
    case SchedulerKind::LCA: break;
  }
  throw InvalidParameter("run_baseline: LCA is not a baseline scheduler");
}

}  // namespace lcasched
