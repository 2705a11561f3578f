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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "zne/errors.hpp"
#include "zne/rng.hpp"

namespace zne::qsim {
namespace {

TEST(Sampling, BasisProjectorIsDeterministic) {
  for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
    const auto s = sample_magnetization(DensityMatrix::basis_state(6, 0), 100, seed);
    EXPECT_EQ(s.mean, 1.0);
    EXPECT_EQ(s.variance, 0.0);
    EXPECT_EQ(s.shots, 100u);
  }
}

TEST(Sampling, MaximallyMixedQubitConcentrates) {
  const std::uint64_t n = 200000;
  const auto s = sample_magnetization(DensityMatrix::maximally_mixed(1), n, 3);
  EXPECT_NEAR(s.mean, 0.0, 5.0 / std::sqrt(static_cast<double>(n)));
  EXPECT_NEAR(s.variance * n, 1.0, 1e-3);
}

TEST(Sampling, FixedSeedIsBitIdentical) {
  std::mt19937_64 rng(6);
  const auto rho = testing::random_state(4, rng);
  const auto a = sample_magnetization(rho, 5000, 42);
  const auto b = sample_magnetization(rho, 5000, 42);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.variance, b.variance);
  const auto c = sample_magnetization(rho, 5000, 43);
  EXPECT_NE(a.mean, c.mean);
}

TEST(Sampling, MeanConvergesForMostSeeds) {
  std::mt19937_64 rng(12);
  const auto rho = testing::random_state(3, rng);
  const double expected = magnetization_expectation(rho);
  int inside = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto s = sample_magnetization(rho, 2000, seed);
    EXPECT_GE(s.mean, -1.0);
    EXPECT_LE(s.mean, 1.0);
    if (std::abs(s.mean - expected) <= 5.0 * std::sqrt(s.variance)) ++inside;
  }
  EXPECT_GE(inside, 198);
}

TEST(Sampling, RejectsTooFewShots) {
  const auto rho = DensityMatrix::basis_state(1, 0);
  EXPECT_THROW(sample_magnetization(rho, 1, 0), InvalidInputError);
  EXPECT_THROW(sample_magnetization(rho, 0, 0), InvalidInputError);
}

TEST(Rng, DerivedSeedsDiffer) {
  EXPECT_NE(derive_seed(1, 0, 1), derive_seed(1, 1, 0));
  EXPECT_NE(derive_seed(1, 0, 1), derive_seed(2, 0, 1));
  EXPECT_EQ(derive_seed(7, 3, 4), derive_seed(7, 3, 4));
  Engine e(5);
  for (int i = 0; i < 1000; ++i) {
    const double u = uniform01(e);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

}  // namespace
}  // namespace zne::qsim
