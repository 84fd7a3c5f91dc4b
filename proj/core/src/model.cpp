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

#include "lcasched/model.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "lcasched/errors.hpp"

namespace lcasched {

std::vector<Violation> validate_instance(const ProblemInstance& instance) {
  std::vector<Violation> out;
  if (instance.tasks.empty()) {
    out.push_back({ViolationKind::EmptyTaskList, "empty task list"});
  }
  if (instance.vms.empty()) {
    out.push_back({ViolationKind::EmptyVmList, "empty VM list"});
  }

  std::unordered_set<std::uint64_t> seen_ids;
  std::vector<bool> seen_arrival(instance.tasks.size(), false);
  bool arrival_ok = true;
  for (const Task& t : instance.tasks) {
    // NaN fails this test too.
    if (!(t.length_mi > 0.0)) {
      out.push_back({ViolationKind::NonpositiveLength,
                     "task " + std::to_string(t.id) + ": nonpositive length"});
    }
    if (!seen_ids.insert(t.id).second) {
      out.push_back({ViolationKind::DuplicateTaskId,
                     "task " + std::to_string(t.id) + ": duplicate task id"});
    }
    if (t.arrival_index >= seen_arrival.size() || seen_arrival[t.arrival_index]) {
      arrival_ok = false;
    } else {
      seen_arrival[t.arrival_index] = true;
    }
  }
  if (!arrival_ok) {
    out.push_back({ViolationKind::ArrivalIndexNotPermutation,
                   "arrival indices are not a permutation of 0..n-1"});
  }

  for (std::size_t v = 0; v < instance.vms.size(); ++v) {
    const VirtualMachine& vm = instance.vms[v];
    if (!(vm.speed_mips > 0.0)) {
      out.push_back({ViolationKind::NonpositiveSpeed,
                     "vm " + std::to_string(vm.id) + ": nonpositive speed"});
    }
    if (vm.id != v) {
      out.push_back({ViolationKind::VmIdNotPosition,
                     "vm " + std::to_string(vm.id) + ": id differs from position " +
                         std::to_string(v)});
    }
  }
  return out;
}

void require_valid(const ProblemInstance& instance) {
  auto violations = validate_instance(instance);
  if (!violations.empty()) {
    throw InvalidInstance(violations.front().message);
  }
}

void require_valid(const ProblemInstance& instance, const Assignment& assignment) {
  if (assignment.vm_of.size() != instance.tasks.size()) {
    throw InvalidAssignment("assignment covers " + std::to_string(assignment.vm_of.size()) +
                            " tasks, instance has " + std::to_string(instance.tasks.size()));
  }
  const std::size_t m = instance.vms.size();
  for (std::size_t k = 0; k < assignment.vm_of.size(); ++k) {
    if (assignment.vm_of[k] >= m) {
      throw InvalidAssignment("task position " + std::to_string(k) + " mapped to VM " +
                              std::to_string(assignment.vm_of[k]) + ", only " +
                              std::to_string(m) + " VMs");
    }
  }
}

std::vector<std::size_t> arrival_order(const ProblemInstance& instance) {
  std::vector<std::size_t> order(instance.tasks.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return instance.tasks[a].arrival_index < instance.tasks[b].arrival_index;
  });
  return order;
}

// Loads are accumulated in arrival order everywhere (here, the LCA evaluator
// and the oracle) so that equal schedules yield bit-identical makespans.
ScheduleResult makespan(const ProblemInstance& instance, const Assignment& assignment) {
  require_valid(instance, assignment);

  ScheduleResult result;
  result.assignment = assignment;
  result.vm_load_s.assign(instance.vms.size(), 0.0);
  result.completion_s.assign(instance.tasks.size(), 0.0);

  for (std::size_t k : arrival_order(instance)) {
    const std::size_t v = assignment.vm_of[k];
    result.vm_load_s[v] += instance.tasks[k].length_mi / instance.vms[v].speed_mips;
    result.completion_s[k] = result.vm_load_s[v];
  }
  result.makespan_s = *std::max_element(result.vm_load_s.begin(), result.vm_load_s.end());
  return result;
}

std::vector<double> vm_loads(const ProblemInstance& instance, const Assignment& assignment) {
  return makespan(instance, assignment).vm_load_s;
}

ProblemInstance make_instance(std::vector<Task> tasks, std::span<const double> speeds_mips) {
  ProblemInstance instance;
  instance.tasks = std::move(tasks);
  instance.vms.reserve(speeds_mips.size());
  for (std::size_t v = 0; v < speeds_mips.size(); ++v) {
    instance.vms.push_back({v, speeds_mips[v]});
  }
  return instance;
}

ProblemInstance make_instance(std::vector<Task> tasks, std::size_t n_vms, double speed_mips) {
  std::vector<double> speeds(n_vms, speed_mips);
  return make_instance(std::move(tasks), speeds);
}

std::vector<Task> tasks_from_lengths(std::span<const double> lengths_mi) {
  std::vector<Task> tasks;
  tasks.reserve(lengths_mi.size());
  for (std::size_t k = 0; k < lengths_mi.size(); ++k) {
    tasks.push_back({k, lengths_mi[k], k});
  }
  return tasks;
}

}  // namespace lcasched
