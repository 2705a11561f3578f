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

#include <cstddef>
#include <utility>
#include <vector>

namespace zne::qsim {

using Edge = std::pair<std::size_t, std::size_t>;

/// Coupling topology of a spin cluster. Edges are stored normalized (first <
/// second) and sorted lexicographically.
class SpinGraph {
 public:
  SpinGraph() = default;
  /// Throws InvalidInputError on self-loops, duplicates, or out-of-range sites.
  SpinGraph(std::size_t n_sites, std::vector<Edge> edges);

  /// rows x cols nearest-neighbour grid, sites numbered row-major.
  static SpinGraph grid(std::size_t rows, std::size_t cols);
  /// 2 x 3 grid: six sites, seven edges.
  static SpinGraph default_cluster();

  std::size_t n_sites() const noexcept { return n_sites_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool operator==(const SpinGraph&) const = default;

 private:
  std::size_t n_sites_ = 0;
  std::vector<Edge> edges_;
};

}  // namespace zne::qsim
