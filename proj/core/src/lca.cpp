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

#include "lcasched/lca.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lcasched/baselines.hpp"
#include "lcasched/errors.hpp"

namespace lcasched {

namespace {

double clamp_coordinate(double value, std::size_t m) {
  const double upper = static_cast<double>(m) - kFormationEpsilon;
  return std::clamp(value, 0.0, upper);
}

int sign_of(Outcome outcome) { return outcome == Outcome::Win ? +1 : -1; }

std::size_t opponent_in(const Week& week, std::size_t slot) {
  for (const Match& match : week) {
    if (match.home == slot) return match.away;
    if (match.away == slot) return match.home;
  }
  throw InvariantViolation("slot " + std::to_string(slot) + " missing from week fixtures");
}

void consider(League& league, Team& team, Formation formation, double fitness) {
  team.current = std::move(formation);
  team.current_fitness = fitness;
  if (fitness < team.best_fitness) {
    team.best = team.current;
    team.best_fitness = fitness;
  }
  if (fitness < league.global_best.fitness) {
    league.global_best = {team.current, fitness};
  }
}

double min_best_fitness(const League& league) {
  double best = league.teams.front().best_fitness;
  for (const Team& team : league.teams) best = std::min(best, team.best_fitness);
  return best;
}

League init_with(const LcaParams& params, const ProblemInstance& instance,
                 MakespanEvaluator& evaluate) {
  validate(params);
  require_valid(instance);

  const std::size_t n = instance.task_count();
  const std::size_t m = instance.vm_count();

  League league;
  league.rng = SplitMix64(params.seed);
  league.teams.resize(params.league_size);

  std::vector<Formation> seeds;
  if (params.seed_with_baselines) {
    seeds = {encode(fcfs(instance)), encode(ljf(instance)), encode(bef(instance))};
  }

  for (std::size_t i = 0; i < league.teams.size(); ++i) {
    Team& team = league.teams[i];
    team.index = i;
    if (i < seeds.size()) {
      team.current = std::move(seeds[i]);
    } else {
      team.current.x.resize(n);
      for (double& coord : team.current.x) {
        coord = clamp_coordinate(league.rng.uniform01() * static_cast<double>(m), m);
      }
    }
    team.current_fitness = evaluate(team.current);
    team.best = team.current;
    team.best_fitness = team.current_fitness;
  }

  const auto champion = std::min_element(
      league.teams.begin(), league.teams.end(),
      [](const Team& a, const Team& b) { return a.best_fitness < b.best_fitness; });
  league.global_best = {champion->best, champion->best_fitness};
  league.f_hat = league.global_best.fitness;
  league.fixtures = season_fixtures(league.slots(), 1);
  league.evaluations = evaluate.evaluations();
  return league;
}

// Every team with a previous match builds a new formation from last week's
// state, so the order teams are processed in does not matter.
void update_phase(League& league, const LcaParams& params, const Week& upcoming_week,
                  std::size_t m, MakespanEvaluator& evaluate) {
  const std::vector<Team> snapshot = league.teams;
  for (Team& team : league.teams) {
    const Team& before = snapshot[team.index];
    if (before.last_outcome == Outcome::None) continue;

    const Formation& prev_opponent = snapshot[*before.last_opponent].current;
    const std::size_t next = opponent_in(upcoming_week, team.index);
    const Team* upcoming = nullptr;
    if (next != league.bye_slot() && snapshot[next].last_outcome != Outcome::None) {
      upcoming = &snapshot[next];
    }

    Formation candidate =
        update_formation(before, prev_opponent, upcoming, params, league.rng, m);
    const double fitness = evaluate(candidate);
    consider(league, team, std::move(candidate), fitness);
  }
}

}  // namespace

void validate(const LcaParams& params) {
  if (params.league_size < 2) {
    throw InvalidParameter("league_size must be at least 2");
  }
  if (params.seasons < 1) {
    throw InvalidParameter("seasons must be positive");
  }
  if (!(params.change_probability > 0.0 && params.change_probability <= 1.0)) {
    throw InvalidParameter("change_probability must lie in (0, 1]");
  }
  if (!(params.own_step_weight >= 0.0) || !(params.opponent_step_weight >= 0.0) ||
      !std::isfinite(params.own_step_weight) || !std::isfinite(params.opponent_step_weight)) {
    throw InvalidParameter("step weights must be finite and non-negative");
  }
}

MakespanEvaluator::MakespanEvaluator(const ProblemInstance& instance)
    : order_(arrival_order(instance)), load_(instance.vm_count()), m_(instance.vm_count()) {
  const std::size_t n = instance.task_count();
  duration_.resize(n * m_);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t v = 0; v < m_; ++v) {
      duration_[k * m_ + v] = instance.tasks[k].length_mi / instance.vms[v].speed_mips;
    }
  }
}

double MakespanEvaluator::operator()(const Formation& formation) {
  if (formation.size() != order_.size()) {
    throw InvalidAssignment("formation length " + std::to_string(formation.size()) +
                            " does not match task count " + std::to_string(order_.size()));
  }
  ++evaluations_;
  std::fill(load_.begin(), load_.end(), 0.0);
  const double top = static_cast<double>(m_ - 1);
  for (std::size_t k : order_) {
    const auto v = static_cast<std::size_t>(std::clamp(std::floor(formation.x[k]), 0.0, top));
    load_[v] += duration_[k * m_ + v];
  }
  return *std::max_element(load_.begin(), load_.end());
}

Formation encode(const Assignment& assignment) {
  Formation formation;
  formation.x.reserve(assignment.vm_of.size());
  for (std::size_t vm : assignment.vm_of) {
    formation.x.push_back(static_cast<double>(vm) + 0.5);
  }
  return formation;
}

Assignment decode(const Formation& formation, std::size_t m) {
  if (m < 1) {
    throw InvalidParameter("decode needs at least one VM");
  }
  const double top = static_cast<double>(m - 1);
  Assignment assignment;
  assignment.vm_of.reserve(formation.size());
  for (double coord : formation.x) {
    // NaN would be UB in the cast; treat it as VM 0.
    const double v = std::isnan(coord) ? 0.0 : std::clamp(std::floor(coord), 0.0, top);
    assignment.vm_of.push_back(static_cast<std::size_t>(v));
  }
  return assignment;
}

Fixtures round_robin(std::size_t teams) {
  if (teams < 2 || teams % 2 != 0) {
    throw InvalidParameter("round_robin needs an even team count >= 2, got " +
                           std::to_string(teams));
  }
  std::vector<std::size_t> circle(teams);
  for (std::size_t i = 0; i < teams; ++i) circle[i] = i;

  Fixtures fixtures;
  fixtures.reserve(teams - 1);
  for (std::size_t w = 0; w + 1 < teams; ++w) {
    Week week;
    week.reserve(teams / 2);
    for (std::size_t i = 0; i < teams / 2; ++i) {
      week.push_back({circle[i], circle[teams - 1 - i]});
    }
    fixtures.push_back(std::move(week));
    // Slot 0 stays fixed; the rest rotate right by one.
    std::rotate(circle.begin() + 1, circle.end() - 1, circle.end());
  }
  return fixtures;
}

Fixtures season_fixtures(std::size_t slots, std::size_t season) {
  Fixtures fixtures = round_robin(slots);
  const std::size_t shift = (season == 0 ? 0 : season - 1) % slots;
  for (Week& week : fixtures) {
    for (Match& match : week) {
      match.home = (match.home + shift) % slots;
      match.away = (match.away + shift) % slots;
    }
  }
  return fixtures;
}

double win_probability(double f_i, double f_j, double f_hat) {
  if (f_i < f_hat || f_j < f_hat) {
    throw InvariantViolation("ideal value exceeds a team fitness (stale f_hat)");
  }
  const double numerator = f_j - f_hat;
  const double denominator = (f_j - f_hat) + (f_i - f_hat);
  if (denominator == 0.0) return 0.5;
  return numerator / denominator;
}

MatchResult play_match(Team& team_i, Team& team_j, double f_hat, SplitMix64& rng) {
  const double p_i = win_probability(team_i.current_fitness, team_j.current_fitness, f_hat);
  const double u = rng.uniform01();
  const bool i_wins = p_i > 0.0 && u <= p_i;

  team_i.last_opponent = team_j.index;
  team_j.last_opponent = team_i.index;
  team_i.last_outcome = i_wins ? Outcome::Win : Outcome::Loss;
  team_j.last_outcome = i_wins ? Outcome::Loss : Outcome::Win;
  return i_wins ? MatchResult{team_i.index, team_j.index}
                : MatchResult{team_j.index, team_i.index};
}

UpdateDraws draw_update(std::size_t dims, double change_probability, SplitMix64& rng) {
  UpdateDraws draws;
  draws.mask.assign(dims, false);
  draws.r_own.assign(dims, 0.0);
  draws.r_opponent.assign(dims, 0.0);
  if (dims == 0) return draws;

  // Bernoulli(p_c) mask, redrawn until at least one dimension changes.
  bool any = false;
  while (!any) {
    for (std::size_t d = 0; d < dims; ++d) {
      draws.mask[d] = rng.uniform01() < change_probability;
      any = any || draws.mask[d];
    }
  }
  for (std::size_t d = 0; d < dims; ++d) {
    if (!draws.mask[d]) continue;
    draws.r_own[d] = rng.uniform01();
    draws.r_opponent[d] = rng.uniform01();
  }
  return draws;
}

Formation apply_update(const Formation& best, const Formation& prev_opponent,
                       const Formation* upcoming, int own_sign, int upcoming_sign,
                       const UpdateDraws& draws, const LcaParams& params, std::size_t m) {
  const std::size_t n = best.size();
  if (prev_opponent.size() != n || (upcoming && upcoming->size() != n) ||
      draws.mask.size() != n) {
    throw InvalidParameter("formation dimensions disagree");
  }

  Formation next = best;
  for (std::size_t d = 0; d < n; ++d) {
    if (draws.mask[d]) {
      double step = params.own_step_weight * draws.r_own[d] * own_sign *
                    (best.x[d] - prev_opponent.x[d]);
      if (upcoming) {
        step += params.opponent_step_weight * draws.r_opponent[d] * upcoming_sign *
                (best.x[d] - upcoming->x[d]);
      }
      next.x[d] += step;
    }
    next.x[d] = clamp_coordinate(next.x[d], m);
  }
  return next;
}

Formation update_formation(const Team& team, const Formation& prev_opponent_formation,
                           const Team* upcoming_opponent, const LcaParams& params,
                           SplitMix64& rng, std::size_t m) {
  if (team.last_outcome == Outcome::None) {
    throw SequencingError("team " + std::to_string(team.index) + " has not played yet");
  }
  if (upcoming_opponent && upcoming_opponent->last_outcome == Outcome::None) {
    throw SequencingError("upcoming opponent " + std::to_string(upcoming_opponent->index) +
                          " has not played yet");
  }
  const UpdateDraws draws = draw_update(team.best.size(), params.change_probability, rng);
  const Formation* upcoming = upcoming_opponent ? &upcoming_opponent->current : nullptr;
  const int upcoming_sign = upcoming_opponent ? sign_of(upcoming_opponent->last_outcome) : 0;
  return apply_update(team.best, prev_opponent_formation, upcoming, sign_of(team.last_outcome),
                      upcoming_sign, draws, params, m);
}

League init_league(const LcaParams& params, const ProblemInstance& instance) {
  MakespanEvaluator evaluate(instance);
  return init_with(params, instance, evaluate);
}

LcaResult run(const LcaParams& params, const ProblemInstance& instance) {
  MakespanEvaluator evaluate(instance);
  League league = init_with(params, instance, evaluate);
  const std::size_t m = instance.vm_count();
  const std::size_t weeks_per_season = league.slots() - 1;

  LcaResult result;
  result.history.reserve(params.seasons * weeks_per_season);

  for (std::size_t season = 1; season <= params.seasons; ++season) {
    league.season = season;
    if (season > 1) league.fixtures = season_fixtures(league.slots(), season);

    for (std::size_t w = 0; w < weeks_per_season; ++w) {
      league.week = w + 1;
      const Week& week = league.fixtures[w];
      if (league.weeks_played > 0) update_phase(league, params, week, m, evaluate);

      league.f_hat = min_best_fitness(league);
      for (const Match& match : week) {
        if (match.home == league.bye_slot() || match.away == league.bye_slot()) continue;
        play_match(league.teams[match.home], league.teams[match.away], league.f_hat, league.rng);
      }
      result.history.push_back(league.global_best.fitness);
      ++league.weeks_played;
    }
  }

  league.evaluations = evaluate.evaluations();
  result.assignment = decode(league.global_best.formation, m);
  result.makespan_s = makespan(instance, result.assignment).makespan_s;
  result.evaluations = league.evaluations;
  return result;
}

}  // namespace lcasched
