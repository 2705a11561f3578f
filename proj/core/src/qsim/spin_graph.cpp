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

#include "zne/qsim/spin_graph.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "zne/errors.hpp"

namespace zne::qsim {

SpinGraph::SpinGraph(std::size_t n_sites, std::vector<Edge> edges) : n_sites_(n_sites) {
  if (n_sites == 0) throw InvalidInputError("spin graph needs at least one site");
  for (auto& [a, b] : edges) {
    if (a == b) throw InvalidInputError(fmt::format("self-loop on site {}", a));
    if (a >= n_sites || b >= n_sites) {
      throw InvalidInputError(fmt::format("edge ({}, {}) out of range for {} sites", a, b, n_sites));
    }
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw InvalidInputError(fmt::format("duplicate edge ({}, {})", dup->first, dup->second));
  }
  edges_ = std::move(edges);
}

SpinGraph SpinGraph::grid(std::size_t rows, std::size_t cols) {
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t site = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(site, site + 1);
      if (r + 1 < rows) edges.emplace_back(site, site + cols);
    }
  }
  return SpinGraph(rows * cols, std::move(edges));
}

SpinGraph SpinGraph::default_cluster() { return grid(2, 3); }

}  // namespace zne::qsim
