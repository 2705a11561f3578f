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

#include <fmt/format.h>

#include "zne/errors.hpp"
#include "zne/qsim/trotter.hpp"

namespace zne::qsim {

CircuitSpec build_trotter_circuit(const IsingModel& model, double t, std::size_t n_trotter,
                                  double p_gate) {
  if (n_trotter < 1) throw InvalidInputError("n_trotter must be >= 1");
  if (!(p_gate >= 0.0 && p_gate <= 1.0)) {
    throw InvalidProbabilityError(fmt::format("gate error probability {} outside [0, 1]", p_gate));
  }
  const auto& graph = model.graph;
  const double dt = t / static_cast<double>(n_trotter);
  const double rx_angle = 2.0 * model.h * dt;
  const double zz_angle = 2.0 * model.j_coupling * dt;

  CircuitSpec circuit{graph.n_sites(), {}};
  circuit.gates.reserve(n_trotter * (graph.n_sites() + 3 * graph.edges().size()));
  for (std::size_t step = 0; step < n_trotter; ++step) {
    for (const auto& [a, b] : graph.edges()) {
      circuit.gates.push_back(GateOp::cnot(a, b, p_gate));
      circuit.gates.push_back(GateOp::rz(b, zz_angle, p_gate));
      circuit.gates.push_back(GateOp::cnot(a, b, p_gate));
    }
    for (std::size_t site = 0; site < graph.n_sites(); ++site) {
      circuit.gates.push_back(GateOp::rx(site, rx_angle, p_gate));
    }
  }
  return circuit;
}

}  // namespace zne::qsim
