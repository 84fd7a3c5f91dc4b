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

// Test-only reference implementations. They share no code with the library
// paths they check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

namespace lcasched::testing {

/// Per-VM loads by direct summation over tasks in position order.
inline std::vector<double> naive_loads(const std::vector<double>& lengths_mi,
                                       const std::vector<double>& speeds_mips,
                                       const std::vector<std::size_t>& vm_of) {
  std::vector<double> load(speeds_mips.size(), 0.0);
  for (std::size_t k = 0; k < lengths_mi.size(); ++k) {
    load[vm_of[k]] += lengths_mi[k] / speeds_mips[vm_of[k]];
  }
  return load;
}

inline double naive_makespan(const std::vector<double>& lengths_mi,
                             const std::vector<double>& speeds_mips,
                             const std::vector<std::size_t>& vm_of) {
  const auto load = naive_loads(lengths_mi, speeds_mips, vm_of);
  return *std::max_element(load.begin(), load.end());
}

/// Recursive enumeration of every assignment; returns the optimal makespan.
inline double recursive_optimum(const std::vector<double>& lengths_mi,
                                const std::vector<double>& speeds_mips) {
  std::vector<std::size_t> vm_of(lengths_mi.size(), 0);
  double best = -1.0;
  std::function<void(std::size_t)> visit = [&](std::size_t k) {
    if (k == lengths_mi.size()) {
      const double value = naive_makespan(lengths_mi, speeds_mips, vm_of);
      if (best < 0.0 || value < best) best = value;
      return;
    }
    for (std::size_t v = 0; v < speeds_mips.size(); ++v) {
      vm_of[k] = v;
      visit(k + 1);
    }
  };
  visit(0);
  return best;
}

inline std::vector<double> random_lengths(std::mt19937_64& gen, std::size_t n, double lo = 200.0,
                                          double hi = 500.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> out(n);
  for (double& x : out) x = dist(gen);
  return out;
}

inline bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace lcasched::testing
