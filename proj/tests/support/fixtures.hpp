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

// Shared fixtures for the unit and acceptance suites.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

namespace zne::testing {

// K in [0, 5], levels spread by at most 1e3, pairwise gap >= 1e-3 of the max.
inline std::vector<double> random_schedule(std::mt19937_64& rng, int max_order = 5) {
  std::uniform_int_distribution<int> order(0, max_order);
  std::uniform_real_distribution<double> log_base(-2.0, 1.0);
  std::uniform_real_distribution<double> log_span(0.0, 3.0);
  while (true) {
    const int k = order(rng);
    const double lo = std::pow(10.0, log_base(rng));
    const double span = std::pow(10.0, log_span(rng));
    std::uniform_real_distribution<double> level(lo, lo * span);
    std::vector<double> l(static_cast<std::size_t>(k + 1));
    l[0] = lo;
    for (std::size_t i = 1; i < l.size(); ++i) l[i] = level(rng);
    std::vector<double> sorted = l;
    std::sort(sorted.begin(), sorted.end());
    bool ok = true;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      ok = ok && (sorted[i] - sorted[i - 1]) >= 1e-3 * sorted.back();
    }
    if (ok) return l;
  }
}

// Reference tables, rows gamma = 0.01, 0.1, 0.5, 0.9 and columns K = 1..5.
// `decimals` is the number of decimal places shown for each cell.
struct ReferenceCell {
  double value;
  int decimals;
};

inline constexpr std::array<double, 4> kTableGammas{0.01, 0.1, 0.5, 0.9};
inline constexpr std::array<std::size_t, 5> kTableOrders{1, 2, 3, 4, 5};

inline constexpr std::array<std::array<ReferenceCell, 5>, 4> kTauRatioTable{{
    {{{9.9, 1}, {56, 0}, {270, 0}, {1213, 0}, {5185, 0}}},
    {{{9.0, 1}, {47, 0}, {193, 0}, {569, 0}, {1017, 0}}},
    {{{5.3, 1}, {15, 0}, {27, 0}, {35, 0}, {39, 0}}},
    {{{2.5, 1}, {4, 0}, {6, 0}, {7, 0}, {8, 0}}},
}};

inline constexpr std::array<std::array<ReferenceCell, 5>, 4> kMixedVarianceTable{{
    {{{1.01, 2}, {1.02, 2}, {1.02, 2}, {1.03, 2}, {1.07, 2}}},
    {{{1.11, 2}, {1.22, 2}, {1.43, 2}, {2.21, 2}, {5.45, 2}}},
    {{{1.89, 2}, {3.72, 2}, {10.09, 2}, {36.03, 2}, {142.6, 1}}},
    {{{3.98, 2}, {13.51, 2}, {47.85, 2}, {176.85, 2}, {666.83, 2}}},
}};

// One decimal: 0.05; integers below 100: 0.5; anything else: 1 %.
inline double tau_tolerance(const ReferenceCell& c) {
  if (c.decimals == 1) return 0.05;
  if (c.decimals == 0 && c.value < 100.0) return 0.5;
  return 0.01 * c.value;
}

// Two decimals: 0.01; anything else: 1 %.
inline double variance_tolerance(const ReferenceCell& c) {
  if (c.decimals == 2) return 0.01;
  return 0.01 * c.value;
}

}  // namespace zne::testing
