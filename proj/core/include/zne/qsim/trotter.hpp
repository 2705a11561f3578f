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
#include <span>
#include <vector>

#include "zne/qsim/circuit.hpp"
#include "zne/qsim/density_matrix.hpp"
#include "zne/qsim/spin_graph.hpp"

namespace zne::qsim {

/// Transverse-field Ising model H = -h sum_i X_i - J sum_<ij> Z_i Z_j on a
/// spin graph, evolved with U(t) = exp(+i t H).
struct IsingModel {
  SpinGraph graph;
  double h = 1.0;
  double j_coupling = 0.5;
};

/// Largest cluster exact_evolution accepts.
inline constexpr std::size_t kMaxExactSites = 12;

/// First-order Trotter circuit for exp(+i t H) with n_trotter steps.
///
/// Each step realizes exp(i dt H_A) exp(i dt H_B), dt = t / n_trotter: first
/// the ZZ layer (CNOT, RZ(2 J dt) on the second site, CNOT per edge, edges in
/// lexicographic order), then RX(2 h dt) on every site. Every gate carries
/// error probability `p_gate`; the circuit has n_trotter (n_sites + 3 |E|)
/// gates.
CircuitSpec build_trotter_circuit(const IsingModel& model, double t, std::size_t n_trotter,
                                  double p_gate);

/// exp(+i t H) |initial_state> <initial_state| exp(-i t H) from a dense
/// eigendecomposition of H. Throws CapacityError beyond kMaxExactSites.
DensityMatrix exact_evolution(const IsingModel& model, double t, std::size_t initial_state);

/// Batch form of exact_evolution returning the magnetization of every
/// requested initial state from a single diagonalization.
std::vector<double> exact_magnetizations(const IsingModel& model, double t,
                                         std::span<const std::size_t> initial_states);

}  // namespace zne::qsim
