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

#include <Eigen/Dense>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>

#include "zne/errors.hpp"

namespace zne {

namespace {

std::vector<double> levels_of(std::span<const NoisePoint> points) {
  std::vector<double> lambdas;
  lambdas.reserve(points.size());
  for (const auto& p : points) {
    if (!std::isfinite(p.mean)) {
      throw InvalidInputError("noise point mean must be finite");
    }
    if (!(p.variance >= 0.0) || !std::isfinite(p.variance)) {
      throw InvalidInputError(
          fmt::format("noise point variance must be finite and >= 0, got {}", p.variance));
    }
    lambdas.push_back(p.lambda);
  }
  return lambdas;
}

}  // namespace

void validate_schedule(std::span<const double> lambdas) {
  if (lambdas.empty()) {
    throw InvalidInputError("noise schedule is empty");
  }
  double max_level = 0.0;
  for (double l : lambdas) {
    if (!(l > 0.0) || !std::isfinite(l)) {
      throw InvalidInputError(fmt::format("noise level must be finite and > 0, got {}", l));
    }
    max_level = std::max(max_level, l);
  }
  std::vector<double> sorted(lambdas.begin(), lambdas.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if ((sorted[i] - sorted[i - 1]) / max_level < kMinRelativeLevelGap) {
      throw DegenerateScheduleError(fmt::format(
          "noise levels {} and {} are not distinct", sorted[i - 1], sorted[i]));
    }
  }
}

std::vector<double> richardson_coefficients(std::span<const double> lambdas) {
  validate_schedule(lambdas);
  const std::size_t n = lambdas.size();
  std::vector<double> betas(n, 1.0);
  for (std::size_t k = 0; k < n; ++k) {
    double beta = 1.0;
    for (std::size_t l = 0; l < n; ++l) {
      if (l != k) beta *= lambdas[l] / (lambdas[l] - lambdas[k]);
    }
    betas[k] = beta;
  }
  return betas;
}

ExtrapolationResult zero_noise_estimate(std::span<const NoisePoint> points) {
  const auto lambdas = levels_of(points);
  ExtrapolationResult result;
  result.betas = richardson_coefficients(lambdas);
  result.order = points.size() - 1;
  for (std::size_t k = 0; k < points.size(); ++k) {
    const double b = result.betas[k];
    result.theta0 += b * points[k].mean;
    result.variance += b * b * points[k].variance;
  }
  return result;
}

std::vector<double> polynomial_fit_solve(std::span<const NoisePoint> points) {
  const auto lambdas = levels_of(points);
  validate_schedule(lambdas);
  using Real = long double;
  using Matrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

  const auto n = static_cast<Eigen::Index>(points.size());
  const Real scale = *std::max_element(lambdas.begin(), lambdas.end());

  // Clustered schedules far from zero make this system badly conditioned, so
  // it is solved in extended precision with one step of iterative refinement.
  Matrix vandermonde(n, n);
  Vector rhs(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Real x = lambdas[static_cast<std::size_t>(k)] / scale;
    Real power = 1;
    for (Eigen::Index j = 0; j < n; ++j) {
      vandermonde(k, j) = power;
      power *= x;
    }
    rhs(k) = points[static_cast<std::size_t>(k)].mean;
  }
  const auto lu = vandermonde.fullPivLu();
  Vector scaled = lu.solve(rhs);
  scaled += lu.solve(Vector(rhs - vandermonde * scaled));

  std::vector<double> theta(points.size());
  Real unscale = 1;
  for (Eigen::Index j = 0; j < n; ++j) {
    theta[static_cast<std::size_t>(j)] = static_cast<double>(scaled(j) / unscale);
    unscale *= scale;
  }
  return theta;
}

double linear_geometric_bound(double lambda_a, double lambda_b, double sigma) {
  if (!(lambda_a > 0.0) || !(lambda_a < lambda_b)) {
    throw InvalidIntervalError(fmt::format(
        "expected 0 < lambda_a < lambda_b, got lambda_a={} lambda_b={}", lambda_a, lambda_b));
  }
  if (!(sigma >= 0.0)) {
    throw InvalidInputError(fmt::format("sigma must be >= 0, got {}", sigma));
  }
  // (b + a) / (b - a) rewritten so that b = 2a yields exactly 3.
  return sigma * (1.0 + 2.0 * lambda_a / (lambda_b - lambda_a));
}

}  // namespace zne
