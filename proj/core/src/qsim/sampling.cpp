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

#include "zne/qsim/sampling.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <vector>

#include "zne/errors.hpp"
#include "zne/rng.hpp"

namespace zne::qsim {

MagnetizationSample sample_magnetization(const DensityMatrix& rho, std::uint64_t n_shots,
                                         std::uint64_t seed) {
  if (n_shots < 2) {
    throw InvalidInputError(fmt::format("need at least 2 shots, got {}", n_shots));
  }
  const std::size_t dim = rho.dim();
  // Round-off can leave tiny negative populations; clamp and renormalize.
  std::vector<double> cdf(dim);
  double total = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    total += std::max(rho(i, i).real(), 0.0);
    cdf[i] = total;
  }
  if (!(total > 0.0)) throw InvalidInputError("state has no probability mass");

  // Outcomes are tallied per basis index, so the statistics are exact sums
  // over n_qubits + 1 distinct magnetization values.
  std::vector<std::uint64_t> counts(dim, 0);
  Engine engine(seed);
  for (std::uint64_t shot = 0; shot < n_shots; ++shot) {
    const double u = uniform01(engine) * total;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    ++counts[static_cast<std::size_t>(it - cdf.begin())];
  }

  const auto n = static_cast<double>(n_shots);
  double sum = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    sum += static_cast<double>(counts[i]) * basis_magnetization(i, rho.n_qubits());
  }
  const double mean = sum / n;
  double squares = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    const double d = basis_magnetization(i, rho.n_qubits()) - mean;
    squares += static_cast<double>(counts[i]) * d * d;
  }
  return {mean, squares / (n - 1.0) / n, n_shots};
}

}  // namespace zne::qsim
