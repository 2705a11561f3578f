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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "zne/experiment.hpp"

namespace zne::io {

/// A run configuration file: every RunConfig field is optional and falls back
/// to the published defaults; "output" and "dataset" carry file paths.
/// Unknown keys are rejected with ConfigError.
///
///   {"h": 1.0, "j_coupling": 0.5, "t_final": 1.5707963267948966,
///    "n_trotter": 80, "p_physical": 0.001, "p_threshold": 0.01,
///    "folds": [1, 3, 5], "n_shots": 10000, "seed": 7, "threads": 4,
///    "graph": {"n_sites": 6, "edges": [[0, 1], [0, 3], ...]},
///    "states": [0, 1, 2], "reference": "exact" | "trotter",
///    "output": "dataset.csv", "dataset": "dataset.csv"}
struct ConfigFile {
  experiment::RunConfig run;
  std::optional<std::string> output;
  std::optional<std::string> dataset;
};

ConfigFile parse_config(std::string_view json_text);
ConfigFile load_config(const std::filesystem::path& path);

}  // namespace zne::io
