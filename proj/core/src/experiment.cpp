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

#include "zne/experiment.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "zne/errors.hpp"
#include "zne/extrapolation.hpp"
#include "zne/qsim/circuit.hpp"
#include "zne/qsim/density_matrix.hpp"
#include "zne/qsim/sampling.hpp"
#include "zne/rng.hpp"

namespace zne::experiment {

std::vector<std::size_t> RunConfig::resolved_states() const {
  if (!states.empty()) return states;
  std::vector<std::size_t> all(std::size_t{1} << graph.n_sites());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return all;
}

void RunConfig::validate() const {
  auto finite = [](double x) { return std::isfinite(x); };
  if (!finite(h) || !finite(j_coupling) || !finite(t_final)) {
    throw ConfigError("h, j_coupling and t_final must be finite");
  }
  if (n_trotter < 1) throw ConfigError("n_trotter must be >= 1");
  if (!(p_physical > 0.0) || !(p_physical <= p_threshold) || !(p_threshold <= 1.0)) {
    throw ConfigError(fmt::format("expected 0 < p_physical <= p_threshold <= 1, got {} and {}",
                                  p_physical, p_threshold));
  }
  if (folds.empty()) throw ConfigError("folds must not be empty");
  for (unsigned m : folds) {
    if (m == 0 || m % 2 == 0) throw ConfigError(fmt::format("fold {} is not odd and positive", m));
  }
  if (std::set<unsigned>(folds.begin(), folds.end()).size() != folds.size()) {
    throw ConfigError("folds must be distinct");
  }
  if (n_shots < 2) throw ConfigError("n_shots must be >= 2");
  if (graph.n_sites() == 0) throw ConfigError("graph must have at least one site");
  if (graph.n_sites() > qsim::kMaxExactSites) {
    throw ConfigError(fmt::format("graph has {} sites; at most {} are supported",
                                  graph.n_sites(), qsim::kMaxExactSites));
  }
  const std::size_t dim = std::size_t{1} << graph.n_sites();
  std::set<std::size_t> seen;
  for (std::size_t s : states) {
    if (s >= dim) throw ConfigError(fmt::format("state {} out of range for {} sites", s, graph.n_sites()));
    if (!seen.insert(s).second) throw ConfigError(fmt::format("state {} listed twice", s));
  }
}

std::vector<Regime> regimes(const RunConfig& config) {
  std::vector<Regime> out;
  const int count = static_cast<int>(config.folds.size());
  for (int i = 0; i < count; ++i) {
    out.push_back({i + 1, true, config.folds[static_cast<std::size_t>(i)], config.p_logical()});
  }
  for (int i = 0; i < count; ++i) {
    out.push_back(
        {count + i + 1, false, config.folds[static_cast<std::size_t>(i)], config.p_physical});
  }
  return out;
}

namespace {

std::size_t worker_count(std::size_t requested, std::size_t tasks) {
  std::size_t n = requested;
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return std::max<std::size_t>(1, std::min(n, tasks));
}

// Runs task(i) for i in [0, count) on a pool of workers; rethrows the first failure.
template <typename Task>
void parallel_for(std::size_t count, std::size_t threads, Task task) {
  const std::size_t workers = worker_count(threads, count);
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            task(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = count;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::vector<EstimateRecord> run_regime_sweep(const RunConfig& config) {
  config.validate();
  const auto states = config.resolved_states();
  const auto regs = regimes(config);
  const auto model = config.model();

  std::vector<qsim::CircuitSpec> circuits;
  circuits.reserve(regs.size());
  for (const auto& r : regs) {
    const auto base = qsim::build_trotter_circuit(model, config.t_final, config.n_trotter, r.p_gate);
    circuits.push_back(qsim::fold_circuit(base, r.fold));
  }

  std::vector<EstimateRecord> records(states.size() * regs.size());
  parallel_for(records.size(), config.threads, [&](std::size_t task) {
    const std::size_t s = task / regs.size();
    const std::size_t r = task % regs.size();
    const auto rho = qsim::run_circuit(states[s], circuits[r]);
    const auto seed = derive_seed(config.seed, states[s], static_cast<std::uint64_t>(regs[r].index));
    const auto sample = qsim::sample_magnetization(rho, config.n_shots, seed);
    records[task] = {states[s],   regs[r].index,   qsim::circuit_noise_level(circuits[r]),
                     sample.mean, sample.variance, sample.shots,
                     seed};
  });
  return records;
}

std::map<std::size_t, double> noiseless_reference(const RunConfig& config) {
  config.validate();
  const auto states = config.resolved_states();
  std::vector<double> values;
  if (config.reference == ReferenceMode::kExact) {
    values = qsim::exact_magnetizations(config.model(), config.t_final, states);
  } else {
    const auto circuit =
        qsim::build_trotter_circuit(config.model(), config.t_final, config.n_trotter, 0.0);
    values.resize(states.size());
    parallel_for(states.size(), config.threads, [&](std::size_t i) {
      values[i] = qsim::magnetization_expectation(qsim::run_circuit(states[i], circuit));
    });
  }
  std::map<std::size_t, double> out;
  for (std::size_t i = 0; i < states.size(); ++i) out.emplace(states[i], values[i]);
  return out;
}

std::vector<ExtrapolationReport> extrapolate_subset(std::span<const EstimateRecord> records,
                                                    std::span<const int> subset,
                                                    std::size_t order,
                                                    const std::map<std::size_t, double>& reference) {
  if (subset.size() != order + 1) {
    throw InvalidInputError(fmt::format("order {} needs {} regimes, got {}", order, order + 1,
                                        subset.size()));
  }
  std::vector<std::size_t> state_order;
  std::map<std::size_t, std::map<int, const EstimateRecord*>> by_state;
  for (const auto& rec : records) {
    auto [it, inserted] = by_state.try_emplace(rec.state);
    if (inserted) state_order.push_back(rec.state);
    it->second[rec.regime] = &rec;
  }

  std::vector<ExtrapolationReport> reports;
  reports.reserve(state_order.size());
  std::vector<NoisePoint> points(subset.size());
  for (std::size_t state : state_order) {
    const auto& regs = by_state.at(state);
    for (std::size_t i = 0; i < subset.size(); ++i) {
      auto it = regs.find(subset[i]);
      if (it == regs.end()) {
        throw IncompleteDatasetError(
            fmt::format("state {} has no record for regime {}", state, subset[i]));
      }
      const auto& rec = *it->second;
      points[i] = {rec.lambda, rec.mean, rec.variance, rec.shots};
    }
    auto ref = reference.find(state);
    if (ref == reference.end()) {
      throw IncompleteDatasetError(fmt::format("no zero-noise reference for state {}", state));
    }
    const auto est = zero_noise_estimate(points);
    reports.push_back({state, std::vector<int>(subset.begin(), subset.end()), est.theta0,
                       est.variance, est.theta0 - ref->second});
  }
  return reports;
}

std::vector<EstimateRecord> with_equal_variances(std::span<const EstimateRecord> records,
                                                 double variance) {
  std::vector<EstimateRecord> out(records.begin(), records.end());
  for (auto& r : out) r.variance = variance;
  return out;
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw InvalidInputError("quantile of an empty sample");
  std::sort(values.begin(), values.end());
  const double pos = std::clamp(q, 0.0, 1.0) * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

Summary aggregate_statistics(std::span<const ExtrapolationReport> reports) {
  if (reports.empty()) throw InvalidInputError("no extrapolation reports to aggregate");
  Summary s;
  s.count = reports.size();
  const auto n = static_cast<double>(reports.size());
  std::vector<double> variances;
  variances.reserve(reports.size());
  for (const auto& r : reports) {
    s.mean_error += r.error;
    s.mean_abs_error += std::abs(r.error);
    variances.push_back(r.variance);
  }
  s.mean_error /= n;
  s.mean_abs_error /= n;
  for (const auto& r : reports) {
    const double d = r.error - s.mean_error;
    s.error_variance += d * d;
  }
  s.error_variance /= n;

  s.variance.min = *std::min_element(variances.begin(), variances.end());
  s.variance.max = *std::max_element(variances.begin(), variances.end());
  s.variance.mean = std::accumulate(variances.begin(), variances.end(), 0.0) / n;
  s.variance.q25 = quantile(variances, 0.25);
  s.variance.median = quantile(variances, 0.5);
  s.variance.q75 = quantile(variances, 0.75);
  return s;
}

std::vector<HistogramBin> histogram(std::span<const double> values, std::size_t bins) {
  if (values.empty() || bins == 0) throw InvalidInputError("histogram needs values and bins");
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  const double width = hi > lo ? (hi - lo) / static_cast<double>(bins) : 1.0;
  std::vector<HistogramBin> out(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    out[b].lo = lo + width * static_cast<double>(b);
    out[b].hi = b + 1 == bins ? std::max(hi, lo + width) : lo + width * static_cast<double>(b + 1);
  }
  for (double v : values) {
    auto b = static_cast<std::size_t>((v - lo) / width);
    ++out[std::min(b, bins - 1)].count;
  }
  return out;
}

}  // namespace zne::experiment
