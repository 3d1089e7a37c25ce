// Copyright 2026 The reid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "reid/config.hpp"

#include <algorithm>
#include <filesystem>
#include <set>

#include "json.hpp"
#include "reid/error.hpp"

namespace reid {
namespace {

using nlohmann::json;

[[noreturn]] void config_error(const std::string& message) {
  throw Error(ErrorCode::kConfig, "config: " + message);
}

std::string resolve_path(const std::string& base_dir, const std::string& path) {
  if (path.empty()) return path;
  std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  return (std::filesystem::path(base_dir) / p).lexically_normal().string();
}

template <typename T>
T get(const json& j, const char* key, const std::string& where) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    config_error("'" + std::string(key) + "' in " + where + " is missing or has the wrong type");
  }
}

template <typename T>
std::optional<T> get_optional(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return get<T>(j, key, where);
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) config_error(where + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) config_error(where + " must be an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

QuasiIdentifier parse_qi(const json& j, const std::string& where) {
  if (j.is_array()) return QuasiIdentifier(string_list(j, where));
  if (!j.is_object() || !j.contains("variables")) {
    config_error(where + " must be a list of names or {\"label\", \"variables\"}");
  }
  return QuasiIdentifier(string_list(j.at("variables"), where + ".variables"),
                         get_optional<std::string>(j, "label", where).value_or(""));
}

CategoricalVariable parse_population_variable(const json& j, std::size_t index) {
  const std::string where = "simulation.population.variables[" + std::to_string(index) + "]";
  if (!j.is_object()) config_error(where + " must be an object");
  CategoricalVariable var;
  var.name = get<std::string>(j, "name", where);
  if (auto uniform = get_optional<std::size_t>(j, "uniform", where)) {
    if (*uniform == 0) config_error(where + ".uniform must be positive");
    for (std::size_t c = 1; c <= *uniform; ++c) {
      var.categories.push_back(std::to_string(c));
      var.weights.push_back(1.0 / static_cast<double>(*uniform));
    }
    return var;
  }
  var.categories = string_list(j.value("categories", json::array()), where + ".categories");
  var.weights = get<std::vector<double>>(j, "weights", where);
  return var;
}

SimulationConfig parse_simulation(const json& j, std::uint64_t seed, unsigned threads,
                                  std::uint64_t min_n1) {
  const std::string where = "simulation";
  if (!j.is_object()) config_error("'simulation' must be an object");
  SimulationConfig sim;
  const json& pop = j.contains("population") ? j.at("population") : json();
  if (!pop.is_object()) config_error("simulation.population must be an object");
  sim.population.size = get<std::uint64_t>(pop, "size", "simulation.population");
  const json& vars = pop.contains("variables") ? pop.at("variables") : json();
  if (!vars.is_array()) config_error("simulation.population.variables must be an array");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    sim.population.variables.push_back(parse_population_variable(vars[i], i));
  }
  sim.population.seed = seed;
  sim.population.validate();

  sim.sampling_fraction = get<double>(j, "sampling_fraction", where);
  if (!(sim.sampling_fraction > 0.0 && sim.sampling_fraction <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "sampling_fraction must lie in (0, 1]");
  }
  if (j.contains("missing_rate")) {
    const json& mr = j.at("missing_rate");
    if (mr.is_number()) {
      for (const auto& v : sim.population.variables) sim.missing_rate[v.name] = mr.get<double>();
    } else if (mr.is_object()) {
      for (const auto& [name, rate] : mr.items()) {
        if (!rate.is_number()) config_error("simulation.missing_rate values must be numbers");
        sim.missing_rate[name] = rate.get<double>();
      }
    } else {
      config_error("simulation.missing_rate must be a number or an object");
    }
  }
  sim.replicates = get_optional<std::size_t>(j, "replicates", where).value_or(1);
  const auto draws = get_optional<std::int64_t>(j, "draws", where);
  if (!draws) config_error("simulation.draws is required");
  if (*draws <= 0) throw Error(ErrorCode::kInvalidArgument, "draws must be positive");
  sim.draws = static_cast<std::uint64_t>(*draws);
  if (sim.replicates == 0) throw Error(ErrorCode::kInvalidArgument, "replicates must be positive");
  if (j.contains("quasi_identifier")) {
    sim.qi = parse_qi(j.at("quasi_identifier"), "simulation.quasi_identifier");
    std::set<std::string> names;
    for (const auto& v : sim.population.variables) names.insert(v.name);
    for (const auto& v : sim.qi->variables()) {
      if (!names.count(v)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "unknown variable '" + v + "' in simulation quasi-identifier");
      }
    }
  }
  sim.seed = seed;
  sim.threads = threads;
  sim.reliability.min_n1 = min_n1;
  return sim;
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "id_column", "missing_tokens", "schema", "input", "waves_dir", "participation",
      "age_variable", "birth_month_column", "quasi_identifiers", "population_size", "n_full",
      "methods", "reliability_min_n1", "require_observed_overlap", "format", "seed", "threads",
      "simulation", "description"};
  return keys;
}

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  if (text == "text") return OutputFormat::kText;
  if (text == "json") return OutputFormat::kJson;
  if (text == "csv") return OutputFormat::kCsv;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown format '" + std::string(text) + "' (expected text, json or csv)");
}

RunConfig parse_run_config(std::string_view json_text, const std::string& base_dir) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    config_error(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) config_error("top level must be an object");
  for (const auto& [key, value] : root.items()) {
    if (!known_keys().count(key)) config_error("unknown key '" + key + "'");
  }

  RunConfig config;
  config.csv.id_column = get_optional<std::string>(root, "id_column", "config").value_or("id");
  const std::vector<std::string> default_missing =
      root.contains("missing_tokens") ? string_list(root.at("missing_tokens"), "missing_tokens")
                                      : std::vector<std::string>{""};

  if (root.contains("schema")) {
    const json& schema = root.at("schema");
    if (!schema.is_array()) config_error("'schema' must be an array");
    for (std::size_t i = 0; i < schema.size(); ++i) {
      const std::string where = "schema[" + std::to_string(i) + "]";
      const json& item = schema[i];
      if (!item.is_object()) config_error(where + " must be an object");
      VariableSpec spec;
      spec.name = get<std::string>(item, "name", where);
      spec.kind = parse_variable_kind(item.value("kind", "categorical"));
      spec.role = parse_variable_role(item.value("role", "background"));
      spec.missing_tokens = item.contains("missing_tokens")
                                ? string_list(item.at("missing_tokens"), where + ".missing_tokens")
                                : default_missing;
      for (const auto& existing : config.schema) {
        if (existing.name == spec.name) config_error("duplicate schema variable '" + spec.name + "'");
      }
      config.schema.push_back(std::move(spec));
    }
  }

  config.input = resolve_path(base_dir, root.value("input", ""));
  config.waves_dir = resolve_path(base_dir, root.value("waves_dir", ""));
  config.participation = resolve_path(base_dir, root.value("participation", ""));
  config.age_variable = root.value("age_variable", "age");
  config.birth_month_column = root.value("birth_month_column", "mob_candidates");

  if (root.contains("quasi_identifiers")) {
    const json& qis = root.at("quasi_identifiers");
    if (!qis.is_array()) config_error("'quasi_identifiers' must be an array");
    for (std::size_t i = 0; i < qis.size(); ++i) {
      config.quasi_identifiers.push_back(
          parse_qi(qis[i], "quasi_identifiers[" + std::to_string(i) + "]"));
    }
  }
  for (const auto& qi : config.quasi_identifiers) {
    for (const auto& name : qi.variables()) {
      const bool known = std::any_of(config.schema.begin(), config.schema.end(),
                                     [&](const VariableSpec& s) { return s.name == name; });
      if (!known) {
        throw Error(ErrorCode::kInvalidArgument,
                    "unknown variable '" + name + "' in quasi-identifier '" + qi.label() + "'");
      }
    }
  }

  config.population_size = get_optional<std::uint64_t>(root, "population_size", "config");
  config.n_full = get_optional<std::uint64_t>(root, "n_full", "config");
  if (config.population_size && config.n_full && *config.population_size < *config.n_full) {
    throw Error(ErrorCode::kInvalidArgument, "population_size must be at least n_full");
  }
  if (root.contains("methods")) {
    config.risk.methods.clear();
    for (const auto& m : string_list(root.at("methods"), "methods")) {
      config.risk.methods.insert(parse_method(m));
    }
  }
  config.risk.reliability.min_n1 =
      get_optional<std::uint64_t>(root, "reliability_min_n1", "config").value_or(2);
  config.risk.match.require_observed_overlap =
      get_optional<bool>(root, "require_observed_overlap", "config").value_or(false);
  config.format = parse_output_format(root.value("format", "text"));
  config.seed = get_optional<std::uint64_t>(root, "seed", "config").value_or(0);
  config.threads = get_optional<unsigned>(root, "threads", "config").value_or(1);
  config.risk.match.threads = config.threads;

  if (root.contains("simulation")) {
    config.simulation = parse_simulation(root.at("simulation"), config.seed, config.threads,
                                         config.risk.reliability.min_n1);
  }
  return config;
}

}  // namespace reid
