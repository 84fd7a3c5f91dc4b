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
#include <span>
#include <string>
#include <vector>

namespace lcasched {

struct Task {
  std::uint64_t id = 0;
  double length_mi = 0.0;  // million instructions
  std::size_t arrival_index = 0;

  friend bool operator==(const Task&, const Task&) = default;
};

struct VirtualMachine {
  std::uint64_t id = 0;
  double speed_mips = 0.0;

  friend bool operator==(const VirtualMachine&, const VirtualMachine&) = default;
};

struct ProblemInstance {
  std::vector<Task> tasks;
  std::vector<VirtualMachine> vms;

  std::size_t task_count() const noexcept { return tasks.size(); }
  std::size_t vm_count() const noexcept { return vms.size(); }
};

/// Decoded schedule: vm_of[k] is the VM executing instance task k.
struct Assignment {
  std::vector<std::size_t> vm_of;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct ScheduleResult {
  Assignment assignment;
  std::vector<double> vm_load_s;
  std::vector<double> completion_s;  // indexed like instance.tasks
  double makespan_s = 0.0;
};

enum class ViolationKind {
  EmptyTaskList,
  EmptyVmList,
  NonpositiveLength,
  NonpositiveSpeed,
  DuplicateTaskId,
  VmIdNotPosition,
  ArrivalIndexNotPermutation,
};

struct Violation {
  ViolationKind kind;
  std::string message;
};

/// Every invariant the instance breaks; empty means valid.
std::vector<Violation> validate_instance(const ProblemInstance& instance);

/// Throws InvalidInstance carrying the first violation.
void require_valid(const ProblemInstance& instance);

/// Throws InvalidAssignment on length mismatch or out-of-range VM index.
void require_valid(const ProblemInstance& instance, const Assignment& assignment);

std::vector<double> vm_loads(const ProblemInstance& instance, const Assignment& assignment);

/// Non-preemptive, zero-release-time schedule. Each VM runs its tasks
/// back-to-back in arrival order; makespan is the latest completion.
ScheduleResult makespan(const ProblemInstance& instance, const Assignment& assignment);

/// Task positions ordered by arrival_index.
std::vector<std::size_t> arrival_order(const ProblemInstance& instance);

ProblemInstance make_instance(std::vector<Task> tasks, std::span<const double> speeds_mips);
ProblemInstance make_instance(std::vector<Task> tasks, std::size_t n_vms, double speed_mips);

/// Tasks with ids and arrival indices 0..n-1 in the given order.
std::vector<Task> tasks_from_lengths(std::span<const double> lengths_mi);

}  // namespace lcasched
