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

#include <istream>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "lcasched/errors.hpp"
#include "lcasched/experiment.hpp"

namespace lcasched {

namespace {

using nlohmann::json;

void reject_unknown(const json& object, const std::set<std::string>& known,
                    const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    if (!known.contains(key)) {
      throw InvalidParameter("unknown key '" + key + "' in " + where);
    }
  }
}

template <typename T>
void read(const json& object, const char* key, T& target) {
  if (!object.contains(key)) return;
  try {
    target = object.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidParameter(std::string("config key '") + key + "': " + e.what());
  }
}

LcaParams lca_from_json(const json& doc) {
  if (!doc.is_object()) throw InvalidParameter("lca_params must be an object");
  reject_unknown(doc,
                 {"league_size", "seasons", "change_probability", "step_weights", "seed",
                  "seed_with_baselines"},
                 "lca_params");
  LcaParams params;
  read(doc, "league_size", params.league_size);
  read(doc, "seasons", params.seasons);
  read(doc, "change_probability", params.change_probability);
  read(doc, "seed", params.seed);
  read(doc, "seed_with_baselines", params.seed_with_baselines);
  if (doc.contains("step_weights")) {
    std::vector<double> weights;
    read(doc, "step_weights", weights);
    if (weights.size() != 2) throw InvalidParameter("step_weights needs exactly two values");
    params.own_step_weight = weights[0];
    params.opponent_step_weight = weights[1];
  }
  return params;
}

}  // namespace

ExperimentConfig config_from_json(const json& doc) {
  if (!doc.is_object()) throw InvalidParameter("experiment config must be a JSON object");
  reject_unknown(doc,
                 {"task_counts", "n_vms", "vm_speed_mips", "length_range_mi", "repetitions",
                  "schedulers", "lca_params", "master_seed", "threads", "measure_wall_time"},
                 "experiment config");

  ExperimentConfig config;
  read(doc, "task_counts", config.task_counts);
  read(doc, "n_vms", config.n_vms);
  read(doc, "repetitions", config.repetitions);
  read(doc, "master_seed", config.master_seed);
  read(doc, "threads", config.threads);
  read(doc, "measure_wall_time", config.measure_wall_time);

  if (doc.contains("vm_speed_mips")) {
    const json& speeds = doc.at("vm_speed_mips");
    if (speeds.is_number()) {
      config.vm_speed_mips = {speeds.get<double>()};
    } else {
      read(doc, "vm_speed_mips", config.vm_speed_mips);
    }
  }
  if (doc.contains("length_range_mi")) {
    std::vector<double> range;
    read(doc, "length_range_mi", range);
    if (range.size() != 2) throw InvalidParameter("length_range_mi needs [min, max]");
    config.length_min_mi = range[0];
    config.length_max_mi = range[1];
  }
  if (doc.contains("schedulers")) {
    std::vector<std::string> names;
    read(doc, "schedulers", names);
    config.schedulers.clear();
    for (const std::string& name : names) {
      auto kind = parse_scheduler(name);
      if (!kind) throw InvalidParameter("unknown scheduler '" + name + "'");
      config.schedulers.push_back(*kind);
    }
  }
  if (doc.contains("lca_params")) {
    config.lca_params = lca_from_json(doc.at("lca_params"));
  }

  validate(config);
  return config;
}

ExperimentConfig load_config(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("config is not valid JSON: ") + e.what());
  }
  return config_from_json(doc);
}

}  // namespace lcasched
