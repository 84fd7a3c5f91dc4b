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
#include <optional>
#include <vector>

#include "lcasched/model.hpp"
#include "lcasched/rng.hpp"

namespace lcasched {

/// Continuous encoding of a schedule: one coordinate per task, kept in [0, m).
/// Coordinate d decodes to VM floor(x[d]).
struct Formation {
  std::vector<double> x;

  std::size_t size() const noexcept { return x.size(); }
  friend bool operator==(const Formation&, const Formation&) = default;
};

/// Upper clamp offset: coordinates never exceed m - kFormationEpsilon.
inline constexpr double kFormationEpsilon = 1e-9;

enum class Outcome : std::uint8_t { None, Win, Loss };

struct Team {
  std::size_t index = 0;
  Formation current;
  double current_fitness = 0.0;
  Formation best;
  double best_fitness = 0.0;
  std::optional<std::size_t> last_opponent;
  Outcome last_outcome = Outcome::None;
};

/// One fixture. Either side may be League::bye_slot() when L is odd.
struct Match {
  std::size_t home = 0;
  std::size_t away = 0;

  friend bool operator==(const Match&, const Match&) = default;
};

using Week = std::vector<Match>;
using Fixtures = std::vector<Week>;

struct LcaParams {
  std::size_t league_size = 20;
  std::size_t seasons = 50;
  double change_probability = 0.3;
  double own_step_weight = 1.0;       // weight on the previous-match term
  double opponent_step_weight = 1.0;  // weight on the upcoming-opponent term
  std::uint64_t seed = 0;
  bool seed_with_baselines = true;
};

void validate(const LcaParams& params);

struct Champion {
  Formation formation;
  double fitness = 0.0;
};

struct League {
  std::vector<Team> teams;
  Fixtures fixtures;       // current season
  std::size_t week = 1;    // 1-based within the season
  std::size_t season = 1;  // 1-based
  std::size_t weeks_played = 0;
  double f_hat = 0.0;
  Champion global_best;
  SplitMix64 rng;
  std::uint64_t evaluations = 0;

  /// Fixture slots: L, or L + 1 when a bye pads an odd league.
  std::size_t slots() const noexcept { return teams.size() + (teams.size() % 2); }
  /// Slot index standing for "no opponent this week" (only present for odd L).
  std::size_t bye_slot() const noexcept { return teams.size(); }
};

struct LcaResult {
  Assignment assignment;
  double makespan_s = 0.0;
  std::vector<double> history;  // global best after each week
  std::uint64_t evaluations = 0;
};

/// Fitness of a formation: makespan of its decoded assignment. Sums loads
/// in arrival order, matching makespan() bit for bit.
class MakespanEvaluator {
 public:
  explicit MakespanEvaluator(const ProblemInstance& instance);

  double operator()(const Formation& formation);
  std::uint64_t evaluations() const noexcept { return evaluations_; }

 private:
  std::vector<double> duration_;  // [position * m + vm] seconds
  std::vector<std::size_t> order_;
  std::vector<double> load_;
  std::size_t m_;
  std::uint64_t evaluations_ = 0;
};

Formation encode(const Assignment& assignment);
Assignment decode(const Formation& formation, std::size_t m);

/// Single round robin on an even number of teams by the circle method:
/// L - 1 weeks of L / 2 pairings, every pair exactly once.
Fixtures round_robin(std::size_t teams);

/// round_robin(slots) with labels shifted by (season - 1) mod slots.
Fixtures season_fixtures(std::size_t slots, std::size_t season);

/// Probability that the team with fitness f_i beats the team with fitness
/// f_j, given ideal (lower-bound) value f_hat. Lower fitness is stronger.
double win_probability(double f_i, double f_j, double f_hat);

struct MatchResult {
  std::size_t winner = 0;
  std::size_t loser = 0;
};

/// Decides the match with one uniform draw and records opponent/outcome on
/// both teams.
MatchResult play_match(Team& team_i, Team& team_j, double f_hat, SplitMix64& rng);

struct UpdateDraws {
  std::vector<bool> mask;
  std::vector<double> r_own;       // zero where mask is false
  std::vector<double> r_opponent;  // zero where mask is false
};

/// Bernoulli(p_c) mask with at least one set bit, then two uniforms per
/// masked dimension.
UpdateDraws draw_update(std::size_t dims, double change_probability, SplitMix64& rng);

/// Deterministic part of the formation update. `upcoming` may be null, which
/// drops the opponent term. `own_sign`/`upcoming_sign` are +1 after a win,
/// -1 after a loss.
Formation apply_update(const Formation& best, const Formation& prev_opponent,
                       const Formation* upcoming, int own_sign, int upcoming_sign,
                       const UpdateDraws& draws, const LcaParams& params, std::size_t m);

/// New candidate formation for `team` ahead of its next match. Moves from
/// the team's best toward or away from the last opponent it faced and the
/// opponent it faces next, depending on how each of those matches ended.
Formation update_formation(const Team& team, const Formation& prev_opponent_formation,
                           const Team* upcoming_opponent, const LcaParams& params,
                           SplitMix64& rng, std::size_t m);

League init_league(const LcaParams& params, const ProblemInstance& instance);

LcaResult run(const LcaParams& params, const ProblemInstance& instance);

}  // namespace lcasched
