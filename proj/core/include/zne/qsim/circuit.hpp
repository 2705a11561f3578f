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

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace zne::qsim {

enum class GateKind { kRx, kRz, kCnot };

/// One gate followed by a depolarizing channel of strength `error_prob` on
/// the qubits it touches. RX(theta) = exp(-i theta X / 2), RZ(theta) =
/// exp(-i theta Z / 2). For CNOT, targets[0] is the control.
struct GateOp {
  GateKind kind = GateKind::kRx;
  std::array<std::size_t, 2> targets{0, 0};
  double angle = 0.0;
  double error_prob = 0.0;

  static GateOp rx(std::size_t qubit, double angle, double error_prob = 0.0);
  static GateOp rz(std::size_t qubit, double angle, double error_prob = 0.0);
  static GateOp cnot(std::size_t control, std::size_t target, double error_prob = 0.0);

  std::size_t arity() const noexcept { return kind == GateKind::kCnot ? 2 : 1; }
  /// Same error probability, inverse unitary.
  GateOp inverse() const;

  bool operator==(const GateOp&) const = default;
};

struct CircuitSpec {
  std::size_t n_qubits = 0;
  std::vector<GateOp> gates;

  /// Throws IndexError for out-of-range or coinciding targets and
  /// InvalidProbabilityError for error probabilities outside [0, 1].
  void validate() const;

  bool operator==(const CircuitSpec&) const = default;
};

/// lambda = sum of per-gate error probabilities.
double circuit_noise_level(const CircuitSpec& circuit);

/// Global unitary folding U (U^dagger U)^((m-1)/2). Every gate of the folded
/// circuit keeps its error probability, so lambda scales by m.
CircuitSpec fold_circuit(const CircuitSpec& circuit, unsigned fold_factor);

/// One gate per line: "RX q theta p", "RZ q theta p", "CNOT q1 q2 p".
/// Numbers use shortest round-trip formatting.
std::string serialize_circuit(const CircuitSpec& circuit);

/// Inverse of serialize_circuit. Blank lines and lines starting with '#' are
/// skipped. Throws ParseError with the offending line number.
CircuitSpec parse_circuit(std::string_view text, std::size_t n_qubits);

}  // namespace zne::qsim
