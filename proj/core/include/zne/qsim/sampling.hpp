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

#include <cstdint>

#include "zne/qsim/density_matrix.hpp"

namespace zne::qsim {

struct MagnetizationSample {
  double mean = 0.0;
  // Sample variance (n - 1 denominator) divided by the shot count.
  double variance = 0.0;
  std::uint64_t shots = 0;
};

/// Draws `n_shots` computational-basis outcomes from diag(rho) and averages
/// their magnetization. Bit-identical for a fixed seed (see zne/rng.hpp).
/// Requires n_shots >= 2.
MagnetizationSample sample_magnetization(const DensityMatrix& rho, std::uint64_t n_shots,
                                         std::uint64_t seed);

}  // namespace zne::qsim
