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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "lcasched/model.hpp"

namespace lcasched {

/// Stable integer codes; they feed seed derivation and CSV ordering.
enum class SchedulerKind : std::uint8_t { FCFS = 0, LJF = 1, BEF = 2, LCA = 3 };

inline constexpr std::array<SchedulerKind, 4> kAllSchedulers = {
    SchedulerKind::FCFS, SchedulerKind::LJF, SchedulerKind::BEF, SchedulerKind::LCA};

constexpr std::uint64_t code(SchedulerKind kind) noexcept {
  return static_cast<std::uint64_t>(kind);
}

/// Lower-case name: "fcfs", "ljf", "bef", "lca".
std::string_view to_string(SchedulerKind kind) noexcept;

/// Case-insensitive inverse of to_string.
std::optional<SchedulerKind> parse_scheduler(std::string_view name) noexcept;

/// List scheduling: walks `ordered_tasks` in order and puts each on the VM
/// whose accumulated load is smallest (lowest index on ties). vm_of follows
/// the order of `ordered_tasks`.
Assignment greedy_earliest_vm(std::span<const Task> ordered_tasks,
                              std::span<const VirtualMachine> vms);

/// First come, first served: arrival order.
Assignment fcfs(const ProblemInstance& instance);

/// Longest job first; equal lengths keep arrival order.
Assignment ljf(const ProblemInstance& instance);

/// Shortest job first ("best effort first"); equal lengths keep arrival order.
Assignment bef(const ProblemInstance& instance);

/// Dispatches to one of the three baselines. LCA is not a baseline.
Assignment run_baseline(SchedulerKind kind, const ProblemInstance& instance);

}  // namespace lcasched
