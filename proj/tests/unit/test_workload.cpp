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

#include <doctest.h>

#include <random>
#include <sstream>

#include "lcasched/errors.hpp"
#include "lcasched/rng.hpp"
#include "lcasched/workload.hpp"

using namespace lcasched;

TEST_CASE("SplitMix64 reference stream") {
  // Published reference outputs for seed 0 (Vigna's splitmix64.c).
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(rng.next() == 0x06C45D188009454FULL);

  SplitMix64 a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.uniform01() == b.uniform01());
  SplitMix64 c(1);
  for (int i = 0; i < 10000; ++i) {
    const double u = c.uniform01();
    CHECK(u >= 0.0);
    CHECK(u <= 1.0);
  }
}

TEST_CASE("generate_synthetic respects bounds and is deterministic") {
  const auto tasks = generate_synthetic({20, 200.0, 500.0, 99});
  REQUIRE(tasks.size() == 20);
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    CHECK(tasks[k].length_mi >= 200.0);
    CHECK(tasks[k].length_mi <= 500.0);
    CHECK(tasks[k].arrival_index == k);
    CHECK(tasks[k].id == k);
  }
  CHECK(generate_synthetic({20, 200.0, 500.0, 99}) == tasks);
  CHECK(generate_synthetic({20, 200.0, 500.0, 100}) != tasks);

  for (const Task& t : generate_synthetic({15, 300.0, 300.0, 5})) CHECK(t.length_mi == 300.0);
}

TEST_CASE("generate_synthetic sample statistics") {
  const auto tasks = generate_synthetic({10000, 200.0, 500.0, 2024});
  double lo = 1e300, hi = -1e300, sum = 0.0;
  for (const Task& t : tasks) {
    lo = std::min(lo, t.length_mi);
    hi = std::max(hi, t.length_mi);
    sum += t.length_mi;
  }
  CHECK(lo >= 200.0);
  CHECK(hi <= 500.0);
  const double mean = sum / 10000.0;
  CHECK(std::abs(mean - 350.0) <= 0.05 * 350.0);
}

TEST_CASE("generate_synthetic rejects bad specs") {
  CHECK_THROWS_AS(generate_synthetic({0, 200.0, 500.0, 1}), InvalidParameter);
  CHECK_THROWS_AS(generate_synthetic({5, 0.0, 500.0, 1}), InvalidParameter);
  CHECK_THROWS_AS(generate_synthetic({5, 500.0, 200.0, 1}), InvalidParameter);
}

TEST_CASE("load_trace parses the documented examples") {
  std::istringstream plain("0,350\n1,410\n");
  auto tasks = load_trace(plain);
  REQUIRE(tasks.size() == 2);
  CHECK(tasks[0].length_mi == 350.0);
  CHECK(tasks[1].length_mi == 410.0);
  CHECK(tasks[1].arrival_index == 1);

  std::istringstream header("task_id,length_mi\n0,250\n");
  tasks = load_trace(header);
  REQUIRE(tasks.size() == 1);
  CHECK(tasks[0].length_mi == 250.0);

  std::istringstream crlf("task_id,length_mi\r\n\r\n7,250.5\r\n\n3,100\r\n");
  tasks = load_trace(crlf);
  REQUIRE(tasks.size() == 2);
  CHECK(tasks[0].id == 7);
  CHECK(tasks[1].id == 3);
  CHECK(tasks[1].arrival_index == 1);
}

TEST_CASE("load_trace errors carry line numbers") {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      load_trace(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("0,-5\n") == 1);
  CHECK(line_of("0,100\n1,0\n") == 2);
  CHECK(line_of("0,100\n\n1,abc\n") == 3);
  CHECK(line_of("0,100,7\n") == 1);
  CHECK(line_of("x,100\n") == 1);
  CHECK(line_of("100\n") == 1);

  std::istringstream neg("0,-5\n");
  CHECK_THROWS_WITH_AS(load_trace(neg), doctest::Contains("nonpositive length"), ParseError);

  std::istringstream dup("0,100\n0,200\n");
  CHECK_THROWS_AS(load_trace(dup), DuplicateIdError);
}

TEST_CASE("write_trace then load_trace is the identity") {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 50; ++trial) {
    WorkloadSpec spec{1 + gen() % 200, 1.0 + static_cast<double>(gen() % 100), 0.0, gen()};
    spec.length_max_mi = spec.length_min_mi + static_cast<double>(gen() % 1000);
    const auto tasks = generate_synthetic(spec);
    std::stringstream buffer;
    const std::size_t bytes = write_trace(tasks, buffer);
    CHECK(bytes == buffer.str().size());
    CHECK(load_trace(buffer) == tasks);
  }
}
