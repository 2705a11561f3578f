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
#include <cstdint>
#include <span>
#include <vector>

namespace zne {

/// One estimate of the observable at total circuit noise level `lambda`.
struct NoisePoint {
  double lambda = 0.0;
  double mean = 0.0;
  // Variance of the mean, i.e. single-shot variance / shots.
  double variance = 0.0;
  // 0 when unknown.
  std::uint64_t shots = 0;
};

struct ExtrapolationResult {
  double theta0 = 0.0;
  double variance = 0.0;
  // Aligned with the input points.
  std::vector<double> betas;
  std::size_t order = 0;
};

/// Relative separation below which two noise levels are treated as equal.
inline constexpr double kMinRelativeLevelGap = 1e-9;

/// Throws unless every level is strictly positive and the schedule has no
/// (near-)duplicates: min |l_i - l_j| / max l must be >= kMinRelativeLevelGap.
void validate_schedule(std::span<const double> lambdas);

/// Richardson weights beta_k = prod_{l != k} lambda_l / (lambda_l - lambda_k).
///
/// The weights reproduce constants exactly (sum beta_k = 1) and annihilate
/// lambda^m for 1 <= m <= K, so sum beta_k O(lambda_k) is the value at zero of
/// the degree-K interpolant through the points.
std::vector<double> richardson_coefficients(std::span<const double> lambdas);

/// theta0 = sum beta_k mean_k and Var[theta0] = sum beta_k^2 Var_k.
ExtrapolationResult zero_noise_estimate(std::span<const NoisePoint> points);

/// Solves the Vandermonde system mean_k = sum_j theta_j lambda_k^j directly
/// and returns theta_0 ... theta_K. Levels are rescaled by their maximum
/// before the solve. Used as an independent check of the weight formula.
std::vector<double> polynomial_fit_solve(std::span<const NoisePoint> points);

/// Upper bound on the zero-noise standard deviation of a two-point linear
/// extrapolation whose points each carry standard deviation `sigma`:
/// sigma * (lambda_b + lambda_a) / (lambda_b - lambda_a).
double linear_geometric_bound(double lambda_a, double lambda_b, double sigma);

}  // namespace zne
