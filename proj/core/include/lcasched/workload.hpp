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
#include <iosfwd>
#include <span>
#include <vector>

#include "lcasched/model.hpp"

namespace lcasched {

struct WorkloadSpec {
  std::size_t n_tasks = 20;
  double length_min_mi = 200.0;
  double length_max_mi = 500.0;
  std::uint64_t seed = 0;
};

void validate(const WorkloadSpec& spec);

/// n_tasks lengths i.i.d. uniform on [min, max]; ids and arrival indices
/// follow generation order.
std::vector<Task> generate_synthetic(const WorkloadSpec& spec);

/// Parses `task_id,length_mi` lines. An optional `task_id,length_mi` header,
/// blank lines and CRLF endings are accepted. Arrival order is line order.
std::vector<Task> load_trace(std::istream& in);

/// Writes the trace format load_trace reads back, lengths in shortest
/// round-trip form. Returns bytes written.
std::size_t write_trace(std::span<const Task> tasks, std::ostream& out);

}  // namespace lcasched
