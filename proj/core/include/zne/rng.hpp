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
#include <random>

namespace zne {

/// SplitMix64 finalizer (Steele, Lea & Flood 2014).
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed for one (state, regime) sampling task:
///   splitmix64(splitmix64(splitmix64(seed) ^ state) ^ regime).
/// Depends only on its arguments, so tasks can run in any order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t state, std::uint64_t regime) noexcept;

/// Sampling engine. std::mt19937_64 has a fully specified output sequence,
/// so datasets are reproducible across platforms and standard libraries.
using Engine = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
/// (std::uniform_real_distribution is implementation-defined.)
double uniform01(Engine& engine);

}  // namespace zne
