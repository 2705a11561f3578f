// Copyright 2026 The zne-mixed Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zne/config_io.hpp"

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <fstream>
#include <set>
#include <sstream>

#include "zne/errors.hpp"

namespace zne::io {

namespace {

using nlohmann::json;

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{
      "h",       "j_coupling", "t_final", "n_trotter", "p_physical", "p_threshold",
      "folds",   "n_shots",    "seed",    "graph",     "states",     "reference",
      "threads", "output",     "dataset"};
  return keys;
}

template <typename T>
T get_as(const json& value, const std::string& key) {
  try {
    return value.get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(fmt::format("config key '{}': {}", key, e.what()));
  }
}

qsim::SpinGraph parse_graph(const json& g) {
  if (!g.is_object()) throw ConfigError("config key 'graph' must be an object");
  for (const auto& [key, _] : g.items()) {
    if (key != "n_sites" && key != "edges") {
      throw ConfigError(fmt::format("unknown key 'graph.{}'", key));
    }
  }
  if (!g.contains("n_sites") || !g.contains("edges")) {
    throw ConfigError("graph needs 'n_sites' and 'edges'");
  }
  const auto n = get_as<std::size_t>(g.at("n_sites"), "graph.n_sites");
  std::vector<qsim::Edge> edges;
  for (const auto& e : g.at("edges")) {
    const auto pair = get_as<std::vector<std::size_t>>(e, "graph.edges");
    if (pair.size() != 2) throw ConfigError("each graph edge must have two sites");
    edges.emplace_back(pair[0], pair[1]);
  }
  try {
    return qsim::SpinGraph(n, std::move(edges));
  } catch (const InvalidInputError& e) {
    throw ConfigError(fmt::format("graph: {}", e.what()));
  }
}

}  // namespace

ConfigFile parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(fmt::format("config is not valid JSON: {}", e.what()));
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");

  ConfigFile cfg;
  auto& run = cfg.run;
  for (const auto& [key, value] : doc.items()) {
    if (!known_keys().contains(key)) throw ConfigError(fmt::format("unknown config key '{}'", key));
    if (key == "h") run.h = get_as<double>(value, key);
    else if (key == "j_coupling") run.j_coupling = get_as<double>(value, key);
    else if (key == "t_final") run.t_final = get_as<double>(value, key);
    else if (key == "n_trotter") run.n_trotter = get_as<std::size_t>(value, key);
    else if (key == "p_physical") run.p_physical = get_as<double>(value, key);
    else if (key == "p_threshold") run.p_threshold = get_as<double>(value, key);
    else if (key == "folds") run.folds = get_as<std::vector<unsigned>>(value, key);
    else if (key == "n_shots") run.n_shots = get_as<std::uint64_t>(value, key);
    else if (key == "seed") run.seed = get_as<std::uint64_t>(value, key);
    else if (key == "threads") run.threads = get_as<std::size_t>(value, key);
    else if (key == "graph") run.graph = parse_graph(value);
    else if (key == "states") run.states = get_as<std::vector<std::size_t>>(value, key);
    else if (key == "reference") {
      const auto mode = get_as<std::string>(value, key);
      if (mode == "exact") run.reference = experiment::ReferenceMode::kExact;
      else if (mode == "trotter") run.reference = experiment::ReferenceMode::kTrotter;
      else throw ConfigError(fmt::format("reference must be 'exact' or 'trotter', got '{}'", mode));
    } else if (key == "output") cfg.output = get_as<std::string>(value, key);
    else if (key == "dataset") cfg.dataset = get_as<std::string>(value, key);
  }
  run.validate();
  return cfg;
}

ConfigFile load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open config '{}'", path.string()));
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

}  // namespace zne::io
