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

#include "zne/resource_model.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "zne/errors.hpp"
#include "zne/extrapolation.hpp"

namespace zne::resource {

namespace {

void require_gamma_positive(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw InvalidInputError(fmt::format("gamma must be finite and > 0, got {}", gamma));
  }
}

double sum_of_squares(const std::vector<double>& values) {
  return std::inner_product(values.begin(), values.end(), values.begin(), 0.0);
}

// Per-shot cost of collecting one shot at every point of the schedule.
double shot_cost(const ScheduleSpec& s, double tau_logical, double tau_physical) {
  return static_cast<double>(s.n_physical_points) * tau_physical +
         static_cast<double>(s.n_logical_points) * tau_logical;
}

}  // namespace

QecModel QecModel::from_rates(double p, double p_th) {
  if (!(p > 0.0) || !(p <= p_th) || !std::isfinite(p_th)) {
    throw InvalidInputError(fmt::format("expected 0 < p <= p_th, got p={} p_th={}", p, p_th));
  }
  QecModel m;
  m.p = p;
  m.p_th = p_th;
  m.gamma = p / p_th;
  m.p_logical = m.gamma * p;
  m.c = 1.0 / p_th;
  return m;
}

void RuntimeModel::validate() const {
  if (!(tau_physical > 0.0) || !(tau_logical >= tau_physical) || !std::isfinite(tau_logical)) {
    throw InvalidInputError(fmt::format(
        "expected 0 < tau_physical <= tau_logical, got tau_physical={} tau_logical={}",
        tau_physical, tau_logical));
  }
}

ScheduleSpec ScheduleSpec::all_logical(std::vector<double> multipliers) {
  ScheduleSpec s;
  s.order = multipliers.empty() ? 0 : multipliers.size() - 1;
  s.n_logical_points = multipliers.size();
  s.n_physical_points = 0;
  s.multipliers = std::move(multipliers);
  return s;
}

ScheduleSpec ScheduleSpec::mixed(double anchor, std::vector<double> physical_multipliers) {
  ScheduleSpec s;
  s.order = physical_multipliers.size();
  s.n_logical_points = 1;
  s.n_physical_points = physical_multipliers.size();
  s.multipliers.reserve(physical_multipliers.size() + 1);
  s.multipliers.push_back(anchor);
  s.multipliers.insert(s.multipliers.end(), physical_multipliers.begin(),
                       physical_multipliers.end());
  return s;
}

void ScheduleSpec::validate() const {
  if (multipliers.size() != order + 1) {
    throw InvalidInputError(fmt::format("schedule of order {} needs {} multipliers, got {}",
                                        order, order + 1, multipliers.size()));
  }
  if (n_logical_points + n_physical_points != order + 1) {
    throw InvalidInputError("schedule point counts must add up to order + 1");
  }
  if (n_logical_points == 0) {
    throw InvalidInputError("schedule needs at least one logical point");
  }
  for (std::size_t i = 0; i < multipliers.size(); ++i) {
    if (!(multipliers[i] > 0.0) || !std::isfinite(multipliers[i])) {
      throw InvalidInputError(fmt::format("multiplier must be > 0, got {}", multipliers[i]));
    }
    // Logical and physical multipliers live in different units; order is
    // checked within each group and across groups by noise_levels().
    if (i > 0 && i != n_logical_points && !(multipliers[i] > multipliers[i - 1])) {
      throw DegenerateScheduleError("multipliers must be strictly increasing within a group");
    }
  }
}

std::vector<double> ScheduleSpec::noise_levels(double gamma) const {
  validate();
  require_gamma_positive(gamma);
  std::vector<double> levels(multipliers);
  for (std::size_t i = 0; i < n_logical_points; ++i) levels[i] *= gamma;
  if (n_logical_points > 0 && n_physical_points > 0 &&
      !(levels[n_logical_points - 1] < levels[n_logical_points])) {
    throw ScheduleOverlapError(fmt::format(
        "logical level {} must sit below the lowest physical level {}",
        levels[n_logical_points - 1], levels[n_logical_points]));
  }
  return levels;
}

double prefactor_all_logical(std::size_t order, std::span<const double> multipliers) {
  if (multipliers.size() != order + 1) {
    throw InvalidInputError(fmt::format("order {} needs {} multipliers, got {}", order,
                                        order + 1, multipliers.size()));
  }
  validate_schedule(multipliers);
  double total = 0.0;
  for (std::size_t k = 0; k <= order; ++k) {
    double term = 1.0;
    for (std::size_t l = 0; l <= order; ++l) {
      if (l == k) continue;
      const double d = multipliers[l] - multipliers[k];
      term *= multipliers[l] * multipliers[l] / (d * d);
    }
    total += term;
  }
  return total;
}

double prefactor_mixed(std::size_t order, double gamma, std::span<const double> multipliers) {
  if (multipliers.size() != order) {
    throw InvalidInputError(fmt::format("order {} needs {} physical multipliers, got {}", order,
                                        order, multipliers.size()));
  }
  require_gamma_positive(gamma);
  if (order == 0) return 1.0;
  validate_schedule(multipliers);
  const double lowest = *std::min_element(multipliers.begin(), multipliers.end());
  if (!(gamma < lowest)) {
    throw ScheduleOverlapError(fmt::format(
        "anchor gamma={} must sit below the lowest physical multiplier {}", gamma, lowest));
  }

  double anchor_term = 1.0;
  for (double m : multipliers) {
    const double d = m - gamma;
    anchor_term *= m * m / (d * d);
  }
  double physical_terms = 0.0;
  for (std::size_t k = 0; k < order; ++k) {
    const double dg = gamma - multipliers[k];
    double term = gamma * gamma / (dg * dg);
    for (std::size_t l = 0; l < order; ++l) {
      if (l == k) continue;
      const double d = multipliers[l] - multipliers[k];
      term *= multipliers[l] * multipliers[l] / (d * d);
    }
    physical_terms += term;
  }
  return anchor_term + physical_terms;
}

double variance_prefactor(const ScheduleSpec& schedule, double gamma) {
  return sum_of_squares(richardson_coefficients(schedule.noise_levels(gamma)));
}

double runtime_ratio(const ScheduleSpec& schedule_logical, const ScheduleSpec& schedule_mixed,
                     double gamma, const RuntimeModel& runtime, RuntimeLimit limit) {
  const double shots_ratio =
      variance_prefactor(schedule_logical, gamma) / variance_prefactor(schedule_mixed, gamma);
  double tau_physical = 0.0;
  if (limit == RuntimeLimit::kExact) {
    runtime.validate();
    tau_physical = runtime.tau_physical;
  } else if (!(runtime.tau_logical > 0.0)) {
    throw InvalidInputError("tau_logical must be > 0");
  }
  return shots_ratio * shot_cost(schedule_logical, runtime.tau_logical, tau_physical) /
         shot_cost(schedule_mixed, runtime.tau_logical, tau_physical);
}

double shots_equivalence_factor(double gamma) {
  require_gamma_positive(gamma);
  if (!(gamma < 1.0)) {
    throw NoCorrectionError(fmt::format("gamma must be < 1, got {}", gamma));
  }
  const double r = (1.0 - gamma) / (1.0 + gamma);
  return 9.0 * r * r;
}

double geometric_runtime_advantage(double gamma, const RuntimeModel& runtime, RuntimeLimit limit) {
  const double shots_ratio = shots_equivalence_factor(gamma);
  if (limit == RuntimeLimit::kIdealized) return 2.0 * shots_ratio;
  runtime.validate();
  return 2.0 * shots_ratio * runtime.tau_logical / (runtime.tau_logical + runtime.tau_physical);
}

std::vector<double> default_multipliers(std::size_t order) {
  std::vector<double> m(order + 1);
  std::iota(m.begin(), m.end(), 1.0);
  return m;
}

ResourceTables emit_tables(std::span<const double> gammas, std::span<const std::size_t> orders,
                           const MultiplierRule& rule) {
  ResourceTables t;
  t.gammas.assign(gammas.begin(), gammas.end());
  t.orders.assign(orders.begin(), orders.end());
  for (double g : gammas) {
    if (!(g > 0.0 && g < 1.0)) {
      throw InvalidInputError(fmt::format("table gamma must lie in (0, 1), got {}", g));
    }
  }
  for (std::size_t k : orders) {
    if (k < 1) throw InvalidInputError("table orders must be >= 1");
  }
  for (double g : gammas) {
    for (std::size_t k : orders) {
      const auto m = rule(k);
      const double all_logical = prefactor_all_logical(k, m);
      // Anchor at gamma * M_0; rescale so the closed form sees it at gamma.
      std::vector<double> physical(m.begin() + 1, m.end());
      for (double& x : physical) x /= m.front();
      const double mixed = prefactor_mixed(k, g, physical);
      const double points = static_cast<double>(k + 1);
      t.tau_ratio.push_back(all_logical / mixed * points);
      t.mixed_variance.push_back(mixed);
    }
  }
  return t;
}

std::string format_tables_text(const ResourceTables& t) {
  std::string out;
  auto emit = [&](const char* title, const std::vector<double>& cells) {
    out += fmt::format("{}\n", title);
    out += fmt::format("{:>8}", "gamma\\K");
    for (std::size_t k : t.orders) out += fmt::format(" {:>10}", k);
    out += '\n';
    for (std::size_t i = 0; i < t.gammas.size(); ++i) {
      out += fmt::format("{:>8}", t.gammas[i]);
      for (std::size_t j = 0; j < t.orders.size(); ++j) {
        out += fmt::format(" {:>10.2f}", cells[i * t.orders.size() + j]);
      }
      out += '\n';
    }
  };
  emit("tau1/tau2 (all-logical vs mixed runtime, idealized)", t.tau_ratio);
  out += '\n';
  emit("Var[O(0)]/sigma^2 (mixed dataset)", t.mixed_variance);
  return out;
}

std::string format_table_csv(const ResourceTables& t, TableKind kind) {
  const auto& cells = kind == TableKind::kTauRatio ? t.tau_ratio : t.mixed_variance;
  std::string out = "gamma,order,value\n";
  for (std::size_t i = 0; i < t.gammas.size(); ++i) {
    for (std::size_t j = 0; j < t.orders.size(); ++j) {
      out += fmt::format("{},{},{}\n", t.gammas[i], t.orders[j], cells[i * t.orders.size() + j]);
    }
  }
  return out;
}

}  // namespace zne::resource
