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
#include <map>
#include <numbers>
#include <span>
#include <vector>

#include "zne/qsim/spin_graph.hpp"
#include "zne/qsim/trotter.hpp"

namespace zne::experiment {

/// How the zero-noise reference magnetization is computed.
enum class ReferenceMode {
  // Dense matrix exponential; Trotter bias shows up in the error statistics.
  kExact,
  // Noiseless fold-1 Trotter circuit.
  kTrotter,
};

/// Parameters of the six-spin transverse-field Ising experiment. Defaults are
/// the published setup: h = 1, J = h/2, T = pi/2, 80 Trotter steps,
/// p = 1e-3 with threshold 1e-2 (gamma = 0.1), folds 1/3/5, 1e4 shots.
struct RunConfig {
  double h = 1.0;
  double j_coupling = 0.5;
  double t_final = std::numbers::pi / 2.0;
  std::size_t n_trotter = 80;
  double p_physical = 1e-3;
  double p_threshold = 1e-2;
  std::vector<unsigned> folds{1, 3, 5};
  std::uint64_t n_shots = 10000;
  std::uint64_t seed = 20260419;
  qsim::SpinGraph graph = qsim::SpinGraph::default_cluster();
  // Empty means every basis state of the cluster.
  std::vector<std::size_t> states;
  ReferenceMode reference = ReferenceMode::kExact;
  // 0 selects std::thread::hardware_concurrency().
  std::size_t threads = 1;

  double gamma() const { return p_physical / p_threshold; }
  double p_logical() const { return gamma() * p_physical; }
  qsim::IsingModel model() const { return {graph, h, j_coupling}; }
  std::vector<std::size_t> resolved_states() const;

  /// Throws ConfigError when a field is out of range.
  void validate() const;
};

/// One noise regime: logical regimes use p_gate = gamma * p, physical ones p.
/// Regimes are numbered 1..F for logical folds and F+1..2F for physical folds.
struct Regime {
  int index = 0;
  bool logical = false;
  unsigned fold = 1;
  double p_gate = 0.0;
};

std::vector<Regime> regimes(const RunConfig& config);

struct EstimateRecord {
  std::size_t state = 0;
  int regime = 0;
  double lambda = 0.0;
  double mean = 0.0;
  double variance = 0.0;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;

  bool operator==(const EstimateRecord&) const = default;
};

struct ExtrapolationReport {
  std::size_t state = 0;
  std::vector<int> regime_subset;
  double theta0 = 0.0;
  double variance = 0.0;
  // theta0 minus the zero-noise reference.
  double error = 0.0;
};

struct Distribution {
  double min = 0.0;
  double q25 = 0.0;
  double median = 0.0;
  double q75 = 0.0;
  double max = 0.0;
  double mean = 0.0;
};

struct Summary {
  std::size_t count = 0;
  double mean_error = 0.0;
  // Population variance of the error across states.
  double error_variance = 0.0;
  double mean_abs_error = 0.0;
  // Distribution of per-state Var[theta0].
  Distribution variance;
};

/// Simulates every (state, regime) pair and samples its magnetization.
/// Records are ordered by state (as listed in the config) then regime;
/// sampling seeds are derive_seed(config.seed, state, regime).
std::vector<EstimateRecord> run_regime_sweep(const RunConfig& config);

/// Zero-noise magnetization for every configured state.
std::map<std::size_t, double> noiseless_reference(const RunConfig& config);

/// Richardson extrapolation through the regimes in `subset` for every state.
/// Throws IncompleteDatasetError if a state lacks a regime or a reference.
std::vector<ExtrapolationReport> extrapolate_subset(std::span<const EstimateRecord> records,
                                                    std::span<const int> subset,
                                                    std::size_t order,
                                                    const std::map<std::size_t, double>& reference);

/// Copy of `records` with every variance replaced by `variance`.
std::vector<EstimateRecord> with_equal_variances(std::span<const EstimateRecord> records,
                                                 double variance);

Summary aggregate_statistics(std::span<const ExtrapolationReport> reports);

/// Linear-interpolation quantile (q in [0, 1]) of unsorted values.
double quantile(std::vector<double> values, double q);

struct HistogramBin {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 0;
};

/// Equal-width bins spanning [min, max] of the values.
std::vector<HistogramBin> histogram(std::span<const double> values, std::size_t bins);

}  // namespace zne::experiment
