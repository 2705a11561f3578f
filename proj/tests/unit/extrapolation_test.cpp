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

#include "zne/extrapolation.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "zne/errors.hpp"

namespace zne {
namespace {

std::vector<NoisePoint> points_from(const std::vector<double>& lambdas,
                                    const std::vector<double>& means, double variance = 0.0) {
  std::vector<NoisePoint> pts;
  for (std::size_t i = 0; i < lambdas.size(); ++i) pts.push_back({lambdas[i], means[i], variance});
  return pts;
}

using testing::random_schedule;

TEST(RichardsonCoefficients, TwoPointsMatchVandermondeOracle) {
  const std::vector<double> l{1.0, 2.0};
  const auto oracle = testing::vandermonde_weights(l);
  const auto betas = richardson_coefficients(l);
  ASSERT_EQ(betas.size(), 2u);
  EXPECT_NEAR(oracle[0], 2.0, 1e-15);
  EXPECT_NEAR(oracle[1], -1.0, 1e-15);
  EXPECT_DOUBLE_EQ(betas[0], 2.0);
  EXPECT_DOUBLE_EQ(betas[1], -1.0);
}

TEST(RichardsonCoefficients, ThreePointsMatchVandermondeOracle) {
  const std::vector<double> l{1.0, 2.0, 3.0};
  const auto oracle = testing::vandermonde_weights(l);
  const std::vector<double> frozen{3.0, -3.0, 1.0};
  const auto betas = richardson_coefficients(l);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_NEAR(oracle[k], frozen[k], 1e-14);
    EXPECT_NEAR(betas[k], frozen[k], 1e-14);
  }
}

TEST(RichardsonCoefficients, SinglePointIsConstantExtrapolation) {
  const std::vector<double> l{5.0};
  EXPECT_EQ(richardson_coefficients(l), std::vector<double>{1.0});
}

TEST(RichardsonCoefficients, RejectsBadSchedules) {
  EXPECT_THROW(richardson_coefficients(std::vector<double>{}), InvalidInputError);
  EXPECT_THROW(richardson_coefficients(std::vector<double>{1.0, 2.0, 1.0}),
               DegenerateScheduleError);
  EXPECT_THROW(richardson_coefficients(std::vector<double>{1.0, 1.0 + 1e-12}),
               DegenerateScheduleError);
  EXPECT_THROW(richardson_coefficients(std::vector<double>{0.0, 1.0}), InvalidInputError);
  EXPECT_THROW(richardson_coefficients(std::vector<double>{-1.0, 1.0}), InvalidInputError);
  // Gap just above the threshold is accepted.
  EXPECT_NO_THROW(richardson_coefficients(std::vector<double>{1.0, 1.0 + 1e-8}));
}

TEST(RichardsonCoefficients, ReproduceConstantsAndAnnihilateMonomials) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto l = random_schedule(rng);
    const auto betas = richardson_coefficients(l);
    const double scale = *std::max_element(l.begin(), l.end());
    EXPECT_NEAR(std::accumulate(betas.begin(), betas.end(), 0.0), 1.0, 1e-12 * [&] {
      double s = 0.0;
      for (double b : betas) s += std::abs(b);
      return std::max(1.0, s);
    }());
    for (std::size_t m = 1; m < l.size(); ++m) {
      double moment = 0.0, magnitude = 0.0;
      for (std::size_t k = 0; k < l.size(); ++k) {
        const double term = betas[k] * std::pow(l[k] / scale, static_cast<double>(m));
        moment += term;
        magnitude += std::abs(term);
      }
      EXPECT_NEAR(moment, 0.0, 1e-10 * std::max(1.0, magnitude)) << "m=" << m;
    }
  }
}

TEST(RichardsonCoefficients, SumToOneOnModerateSchedules) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> l{u(rng), u(rng), u(rng)};
    if (std::abs(l[0] - l[1]) < 0.05 || std::abs(l[1] - l[2]) < 0.05 ||
        std::abs(l[0] - l[2]) < 0.05) {
      continue;
    }
    const auto b = richardson_coefficients(l);
    EXPECT_NEAR(b[0] + b[1] + b[2], 1.0, 1e-12);
  }
}

TEST(ZeroNoiseEstimate, TwoPointLinear) {
  const double y1 = 0.73, y2 = 0.41, var = 0.0025;
  const auto r = zero_noise_estimate(points_from({1.0, 2.0}, {y1, y2}, var));
  EXPECT_DOUBLE_EQ(r.theta0, 2 * y1 - y2);
  EXPECT_DOUBLE_EQ(r.variance, 5 * var);
  EXPECT_EQ(r.order, 1u);
  EXPECT_EQ(r.betas.size(), 2u);
}

TEST(ZeroNoiseEstimate, SinglePoint) {
  const auto r = zero_noise_estimate(points_from({0.3}, {0.25}, 0.01));
  EXPECT_EQ(r.theta0, 0.25);
  EXPECT_EQ(r.variance, 0.01);
  EXPECT_EQ(r.order, 0u);
}

TEST(ZeroNoiseEstimate, ExactOnQuadratics) {
  auto q = [](double x) { return 0.8 - 0.3 * x + 0.05 * x * x; };
  const auto r = zero_noise_estimate(points_from({1, 2, 3}, {q(1), q(2), q(3)}));
  EXPECT_NEAR(r.theta0, 0.8, 1e-14);
  EXPECT_EQ(r.variance, 0.0);
}

TEST(ZeroNoiseEstimate, UnequalVariancesPropagate) {
  std::vector<NoisePoint> pts{{1.0, 0.5, 0.01}, {3.0, 0.2, 0.04}};
  // beta = [3/2, -1/2].
  const auto r = zero_noise_estimate(pts);
  EXPECT_NEAR(r.theta0, 1.5 * 0.5 - 0.5 * 0.2, 1e-15);
  EXPECT_NEAR(r.variance, 2.25 * 0.01 + 0.25 * 0.04, 1e-15);
}

TEST(ZeroNoiseEstimate, RejectsInvalidPoints) {
  EXPECT_THROW(zero_noise_estimate(points_from({1, 2}, {0, 0}, -1.0)), InvalidInputError);
  EXPECT_THROW(zero_noise_estimate(points_from({1, 1}, {0, 0})), DegenerateScheduleError);
  EXPECT_THROW(zero_noise_estimate(std::vector<NoisePoint>{}), InvalidInputError);
}

TEST(ZeroNoiseEstimate, PermutationInvariant) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> y(-1.0, 1.0), v(0.0, 0.01);
  for (int trial = 0; trial < 200; ++trial) {
    const auto l = random_schedule(rng);
    std::vector<NoisePoint> pts;
    for (double x : l) pts.push_back({x, y(rng), v(rng)});
    std::vector<std::size_t> perm(pts.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<NoisePoint> shuffled;
    for (auto i : perm) shuffled.push_back(pts[i]);

    const auto a = zero_noise_estimate(pts);
    const auto b = zero_noise_estimate(shuffled);
    for (std::size_t i = 0; i < perm.size(); ++i) {
      EXPECT_DOUBLE_EQ(b.betas[i], a.betas[perm[i]]);
    }
    double scale = 0.0, vscale = 0.0;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      scale += std::abs(a.betas[k] * pts[k].mean);
      vscale += a.betas[k] * a.betas[k] * pts[k].variance;
    }
    EXPECT_NEAR(a.theta0, b.theta0, 1e-12 * std::max(1.0, scale));
    EXPECT_NEAR(a.variance, b.variance, 1e-12 * vscale);
  }
}

TEST(PolynomialFitSolve, Examples) {
  const auto squares = polynomial_fit_solve(points_from({1, 2, 3}, {1, 4, 9}));
  ASSERT_EQ(squares.size(), 3u);
  EXPECT_NEAR(squares[0], 0.0, 1e-12);
  EXPECT_NEAR(squares[1], 0.0, 1e-12);
  EXPECT_NEAR(squares[2], 1.0, 1e-12);

  const auto line = polynomial_fit_solve(points_from({1, 2}, {3, 5}));
  EXPECT_NEAR(line[0], 1.0, 1e-12);
  EXPECT_NEAR(line[1], 2.0, 1e-12);

  EXPECT_THROW(polynomial_fit_solve(points_from({2, 2}, {1, 1})), DegenerateScheduleError);
}

TEST(PolynomialFitSolve, RecoversRandomCubics) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> coef(-1.0, 1.0), lvl(0.1, 5.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::vector<double> c{coef(rng), coef(rng), coef(rng), coef(rng)};
    std::vector<double> l;
    while (l.size() < 4) {
      const double x = lvl(rng);
      if (std::all_of(l.begin(), l.end(), [&](double o) { return std::abs(o - x) > 0.2; })) {
        l.push_back(x);
      }
    }
    std::vector<double> y;
    for (double x : l) y.push_back(c[0] + x * (c[1] + x * (c[2] + x * c[3])));
    const auto theta = polynomial_fit_solve(points_from(l, y));
    for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(theta[j], c[j], 1e-8);
  }
}

TEST(PolynomialFitSolve, ReproducesEveryMean) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> y(-1.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    auto l = random_schedule(rng);
    if (l.size() > 4) continue;  // higher orders are checked through theta_0 only
    std::vector<double> means;
    for (std::size_t i = 0; i < l.size(); ++i) means.push_back(y(rng));
    const auto theta = polynomial_fit_solve(points_from(l, means));
    for (std::size_t k = 0; k < l.size(); ++k) {
      double value = 0.0;
      for (std::size_t j = theta.size(); j-- > 0;) value = value * l[k] + theta[j];
      EXPECT_NEAR(value, means[k], 1e-9 * std::max(1.0, std::abs(means[k])));
    }
  }
}

TEST(PolynomialFitSolve, ThetaZeroMatchesWeightFormula) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> y(-1.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto l = random_schedule(rng);
    std::vector<double> means;
    for (std::size_t i = 0; i < l.size(); ++i) means.push_back(y(rng));
    const auto pts = points_from(l, means);
    const double via_weights = zero_noise_estimate(pts).theta0;
    const double via_solve = polynomial_fit_solve(pts).front();
    EXPECT_LE(std::abs(via_weights - via_solve),
              1e-9 * std::max(std::abs(via_weights), std::abs(via_solve)))
        << "trial " << trial << " K=" << l.size() - 1;
  }
}

TEST(LinearGeometricBound, ClosedForms) {
  for (double gamma : {0.01, 0.1, 0.5}) {
    for (double np : {0.5, 2.16, 10.0}) {
      EXPECT_NEAR(linear_geometric_bound(gamma * np, 2 * gamma * np, 0.1), 0.3, 1e-15);
      EXPECT_NEAR(linear_geometric_bound(gamma * np, np, 0.1),
                  0.1 * (1 + gamma) / (1 - gamma), 1e-14);
    }
  }
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> log_value(-6.0, 6.0);
  for (int trial = 0; trial < 10000; ++trial) {
    const double l = std::pow(10.0, log_value(rng));
    const double sigma = std::pow(10.0, log_value(rng));
    ASSERT_EQ(linear_geometric_bound(l, 2.0 * l, sigma), 3.0 * sigma) << l << " " << sigma;
  }
  EXPECT_EQ(linear_geometric_bound(1.0, 3.0, 0.0), 0.0);
  EXPECT_THROW(linear_geometric_bound(2.0, 2.0, 1.0), InvalidIntervalError);
  EXPECT_THROW(linear_geometric_bound(3.0, 2.0, 1.0), InvalidIntervalError);
  EXPECT_THROW(linear_geometric_bound(1.0, 2.0, -1.0), InvalidInputError);
}

TEST(LinearGeometricBound, DominatesStatisticalStd) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(0.01, 10.0);
  for (int trial = 0; trial < 1000; ++trial) {
    double a = u(rng), b = u(rng);
    if (std::abs(a - b) < 1e-6) continue;
    if (a > b) std::swap(a, b);
    const double sigma = u(rng);
    const auto betas = richardson_coefficients(std::vector<double>{a, b});
    const double statistical = sigma * std::hypot(betas[0], betas[1]);
    EXPECT_GE(linear_geometric_bound(a, b, sigma), statistical * (1 - 1e-12));
  }
}

}  // namespace
}  // namespace zne
