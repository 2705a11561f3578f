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
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace zne::resource {

/// Error correction modeled as a suppression of the per-gate error rate,
/// p -> gamma * p with gamma = p / p_th.
struct QecModel {
  double p = 0.0;
  double p_th = 0.0;
  double gamma = 0.0;
  double p_logical = 0.0;
  // Bound on the number of two-error events, c = 1 / p_th.
  double c = 0.0;

  /// Requires 0 < p <= p_th. gamma == 1 is accepted (the code does nothing).
  static QecModel from_rates(double p, double p_th);
};

/// Wall time per shot of a logical and a physical circuit.
struct RuntimeModel {
  double tau_logical = 1.0;
  double tau_physical = 0.0;

  /// Requires tau_physical > 0 and tau_logical >= tau_physical.
  void validate() const;
};

/// Noise-scale multipliers for one extrapolation dataset. The first
/// `n_logical_points` multipliers are logical points (lambda = M * gamma * n * p),
/// the remaining `n_physical_points` are physical (lambda = M * n * p).
struct ScheduleSpec {
  std::size_t order = 0;
  std::vector<double> multipliers;
  std::size_t n_logical_points = 0;
  std::size_t n_physical_points = 0;

  /// All K+1 points logical.
  static ScheduleSpec all_logical(std::vector<double> multipliers);
  /// One logical anchor with multiplier `anchor`, the rest physical.
  static ScheduleSpec mixed(double anchor, std::vector<double> physical_multipliers);

  void validate() const;

  /// Noise levels in units of n*p.
  std::vector<double> noise_levels(double gamma) const;
};

/// #1 = sum_k prod_{l != k} M_l^2 / (M_l - M_k)^2 over M_0..M_K.
double prefactor_all_logical(std::size_t order, std::span<const double> multipliers);

/// #2 for a logical anchor at gamma and physical points at M_1..M_K:
/// prod_l M_l^2/(M_l - gamma)^2 + sum_k gamma^2/(gamma - M_k)^2 prod_{l != k} M_l^2/(M_l - M_k)^2.
double prefactor_mixed(std::size_t order, double gamma, std::span<const double> multipliers);

/// Sum of squared Richardson weights for an arbitrary schedule.
double variance_prefactor(const ScheduleSpec& schedule, double gamma);

enum class RuntimeLimit {
  kExact,
  // tau_physical / tau_logical -> 0.
  kIdealized,
};

/// Physical runtime of dataset `a` over dataset `b` at equal zero-noise
/// variance: (#a / #b) * (N0a tau_p + N1a tau_l) / (N0b tau_p + N1b tau_l).
/// With `a` all-logical and the idealized limit this is (#1/#2) * N / N_1.
double runtime_ratio(const ScheduleSpec& schedule_logical, const ScheduleSpec& schedule_mixed,
                     double gamma, const RuntimeModel& runtime,
                     RuntimeLimit limit = RuntimeLimit::kExact);

/// N_shots,1 / N_shots,2 for the two-point linear case: 9 ((1-gamma)/(1+gamma))^2.
double shots_equivalence_factor(double gamma);

/// tau_case1 / tau_case2 for the two-point linear case: two logical points at
/// (gamma, 2 gamma) versus a logical anchor at gamma and a physical point at 1.
double geometric_runtime_advantage(double gamma, const RuntimeModel& runtime,
                                   RuntimeLimit limit = RuntimeLimit::kIdealized);

/// Returns M_0..M_K for a given order K.
using MultiplierRule = std::function<std::vector<double>(std::size_t order)>;

/// M = [1, 2, ..., K+1].
std::vector<double> default_multipliers(std::size_t order);

struct ResourceTables {
  std::vector<double> gammas;
  std::vector<std::size_t> orders;
  // Row-major [gamma][order].
  std::vector<double> tau_ratio;
  std::vector<double> mixed_variance;

  double tau_ratio_at(std::size_t gamma_index, std::size_t order_index) const {
    return tau_ratio[gamma_index * orders.size() + order_index];
  }
  double mixed_variance_at(std::size_t gamma_index, std::size_t order_index) const {
    return mixed_variance[gamma_index * orders.size() + order_index];
  }
};

/// Idealized tau1/tau2 and the mixed-data variance prefactor #2 for every
/// (gamma, K) cell. The all-logical dataset uses M_0..M_K; the mixed dataset
/// anchors at gamma * M_0 and keeps M_1..M_K physical.
ResourceTables emit_tables(std::span<const double> gammas, std::span<const std::size_t> orders,
                           const MultiplierRule& rule = default_multipliers);

std::string format_tables_text(const ResourceTables& tables);

enum class TableKind { kTauRatio, kMixedVariance };

/// CSV with header "gamma,order,value".
std::string format_table_csv(const ResourceTables& tables, TableKind kind);

}  // namespace zne::resource
