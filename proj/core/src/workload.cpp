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

#include "lcasched/workload.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_set>

#include "lcasched/errors.hpp"
#include "lcasched/rng.hpp"

namespace lcasched {

namespace {

constexpr std::string_view kTraceHeader = "task_id,length_mi";

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

template <typename T>
bool parse_number(std::string_view field, T& value) {
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

void validate(const WorkloadSpec& spec) {
  if (spec.n_tasks < 1) {
    throw InvalidParameter("workload needs at least one task");
  }
  if (!(spec.length_min_mi > 0.0) || !std::isfinite(spec.length_max_mi) ||
      spec.length_min_mi > spec.length_max_mi) {
    throw InvalidParameter("workload length range must satisfy 0 < min <= max");
  }
}

std::vector<Task> generate_synthetic(const WorkloadSpec& spec) {
  validate(spec);
  SplitMix64 rng(spec.seed);
  const double width = spec.length_max_mi - spec.length_min_mi;

  std::vector<Task> tasks;
  tasks.reserve(spec.n_tasks);
  for (std::size_t k = 0; k < spec.n_tasks; ++k) {
    const double length = spec.length_min_mi + rng.uniform01() * width;
    tasks.push_back({k, std::min(length, spec.length_max_mi), k});
  }
  return tasks;
}

std::vector<Task> load_trace(std::istream& in) {
  std::vector<Task> tasks;
  std::unordered_set<std::uint64_t> ids;
  std::string raw;
  std::size_t line_no = 0;
  bool seen_content = false;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;

    if (!seen_content) {
      seen_content = true;
      if (line == kTraceHeader) continue;
    }

    const auto comma = line.find(',');
    if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError(line_no, "expected 2 comma-separated fields");
    }
    const std::string_view id_field = trim(line.substr(0, comma));
    const std::string_view len_field = trim(line.substr(comma + 1));

    std::uint64_t id = 0;
    if (!parse_number(id_field, id)) {
      throw ParseError(line_no, "task_id is not a non-negative integer");
    }
    double length = 0.0;
    if (!parse_number(len_field, length) || !std::isfinite(length)) {
      throw ParseError(line_no, "length_mi is not a number");
    }
    if (!(length > 0.0)) {
      throw ParseError(line_no, "nonpositive length");
    }
    if (!ids.insert(id).second) {
      throw DuplicateIdError(line_no, "duplicate task_id " + std::to_string(id));
    }
    tasks.push_back({id, length, tasks.size()});
  }
  if (in.bad()) {
    throw IoError("failed reading trace stream");
  }
  return tasks;
}

std::size_t write_trace(std::span<const Task> tasks, std::ostream& out) {
  std::string buffer(kTraceHeader);
  buffer += '\n';
  char num[64];
  for (const Task& t : tasks) {
    buffer += std::to_string(t.id);
    buffer += ',';
    auto [ptr, ec] = std::to_chars(num, num + sizeof num, t.length_mi);
    buffer.append(num, ptr);
    buffer += '\n';
  }
  out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
  if (!out) {
    throw IoError("failed writing trace");
  }
  return buffer.size();
}

}  // namespace lcasched
