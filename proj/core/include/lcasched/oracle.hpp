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

#include <cstdint>

#include "lcasched/model.hpp"

namespace lcasched {

/// Largest m^n the exhaustive search accepts.
inline constexpr std::uint64_t kOracleLimit = 10'000'000;

struct OptimalSchedule {
  Assignment assignment;
  double makespan_s = 0.0;
};

/// Exhaustive search over all m^n assignments. Among optimal assignments the
/// lexicographically smallest vm_of is returned. Throws SizeGuardError when
/// m^n exceeds kOracleLimit.
OptimalSchedule brute_force_optimum(const ProblemInstance& instance);

/// max(total work / total speed, longest task / fastest VM).
double lower_bound(const ProblemInstance& instance);

}  // namespace lcasched
