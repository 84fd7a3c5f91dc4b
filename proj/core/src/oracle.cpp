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

#include "lcasched/oracle.hpp"

#include <algorithm>
#include <string>

#include "lcasched/errors.hpp"

namespace lcasched {

OptimalSchedule brute_force_optimum(const ProblemInstance& instance) {
  require_valid(instance);
  const std::size_t n = instance.task_count();
  const std::size_t m = instance.vm_count();

  std::uint64_t space = 1;
  for (std::size_t k = 0; k < n; ++k) {
    space *= m;
    if (space > kOracleLimit) {
      throw SizeGuardError("brute force over " + std::to_string(m) + "^" + std::to_string(n) +
                           " assignments exceeds the oracle limit");
    }
  }

  const std::vector<std::size_t> order = arrival_order(instance);
  std::vector<std::size_t> digits(n, 0);  // vm_of as a mixed-radix counter
  std::vector<double> load(m);

  OptimalSchedule best;
  bool have_best = false;
  for (std::uint64_t step = 0; step < space; ++step) {
    std::fill(load.begin(), load.end(), 0.0);
    for (std::size_t k : order) {
      load[digits[k]] += instance.tasks[k].length_mi / instance.vms[digits[k]].speed_mips;
    }
    const double value = *std::max_element(load.begin(), load.end());
    // Counter runs in lexicographic order, so strict improvement keeps the
    // smallest vm_of among ties.
    if (!have_best || value < best.makespan_s) {
      best.assignment.vm_of = digits;
      best.makespan_s = value;
      have_best = true;
    }

    for (std::size_t d = n; d-- > 0;) {
      if (++digits[d] < m) break;
      digits[d] = 0;
    }
  }
  return best;
}

double lower_bound(const ProblemInstance& instance) {
  require_valid(instance);
  double total_work = 0.0;
  double longest = 0.0;
  for (const Task& t : instance.tasks) {
    total_work += t.length_mi;
    longest = std::max(longest, t.length_mi);
  }
  double total_speed = 0.0;
  double fastest = 0.0;
  for (const VirtualMachine& vm : instance.vms) {
    total_speed += vm.speed_mips;
    fastest = std::max(fastest, vm.speed_mips);
  }
  return std::max(total_work / total_speed, longest / fastest);
}

}  // namespace lcasched
