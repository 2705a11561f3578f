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

#include "zne/qsim/circuit.hpp"

#include <fmt/format.h>

#include <charconv>
#include <cmath>
#include <sstream>

#include "zne/errors.hpp"

namespace zne::qsim {

GateOp GateOp::rx(std::size_t qubit, double angle, double error_prob) {
  return GateOp{GateKind::kRx, {qubit, qubit}, angle, error_prob};
}

GateOp GateOp::rz(std::size_t qubit, double angle, double error_prob) {
  return GateOp{GateKind::kRz, {qubit, qubit}, angle, error_prob};
}

GateOp GateOp::cnot(std::size_t control, std::size_t target, double error_prob) {
  return GateOp{GateKind::kCnot, {control, target}, 0.0, error_prob};
}

GateOp GateOp::inverse() const {
  GateOp inv = *this;
  if (kind != GateKind::kCnot) inv.angle = -angle;
  return inv;
}

void CircuitSpec::validate() const {
  if (n_qubits == 0) throw InvalidInputError("circuit needs at least one qubit");
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const auto& g = gates[i];
    for (std::size_t t = 0; t < g.arity(); ++t) {
      if (g.targets[t] >= n_qubits) {
        throw IndexError(fmt::format("gate {}: qubit {} out of range for {} qubits", i,
                                     g.targets[t], n_qubits));
      }
    }
    if (g.kind == GateKind::kCnot && g.targets[0] == g.targets[1]) {
      throw IndexError(fmt::format("gate {}: CNOT control and target coincide", i));
    }
    if (!(g.error_prob >= 0.0 && g.error_prob <= 1.0)) {
      throw InvalidProbabilityError(
          fmt::format("gate {}: error probability {} outside [0, 1]", i, g.error_prob));
    }
    if (!std::isfinite(g.angle)) {
      throw InvalidInputError(fmt::format("gate {}: angle is not finite", i));
    }
  }
}

double circuit_noise_level(const CircuitSpec& circuit) {
  // Neumaier summation: thousands of identical terms otherwise drift by ulps.
  double sum = 0.0;
  double compensation = 0.0;
  for (const auto& g : circuit.gates) {
    const double x = g.error_prob;
    const double t = sum + x;
    compensation += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  return sum + compensation;
}

CircuitSpec fold_circuit(const CircuitSpec& circuit, unsigned fold_factor) {
  if (fold_factor == 0 || fold_factor % 2 == 0) {
    throw InvalidFoldError(fmt::format("fold factor must be odd and >= 1, got {}", fold_factor));
  }
  std::vector<GateOp> inverse;
  inverse.reserve(circuit.gates.size());
  for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it) {
    inverse.push_back(it->inverse());
  }
  CircuitSpec folded{circuit.n_qubits, {}};
  folded.gates.reserve(circuit.gates.size() * fold_factor);
  folded.gates.insert(folded.gates.end(), circuit.gates.begin(), circuit.gates.end());
  for (unsigned k = 0; k < (fold_factor - 1) / 2; ++k) {
    folded.gates.insert(folded.gates.end(), inverse.begin(), inverse.end());
    folded.gates.insert(folded.gates.end(), circuit.gates.begin(), circuit.gates.end());
  }
  return folded;
}

std::string serialize_circuit(const CircuitSpec& circuit) {
  std::string out;
  for (const auto& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::kRx:
        out += fmt::format("RX {} {} {}\n", g.targets[0], g.angle, g.error_prob);
        break;
      case GateKind::kRz:
        out += fmt::format("RZ {} {} {}\n", g.targets[0], g.angle, g.error_prob);
        break;
      case GateKind::kCnot:
        out += fmt::format("CNOT {} {} {}\n", g.targets[0], g.targets[1], g.error_prob);
        break;
    }
  }
  return out;
}

namespace {

template <typename T>
T parse_number(const std::string& token, std::size_t line) {
  T value{};
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, fmt::format("invalid number '{}'", token));
  }
  return value;
}

}  // namespace

CircuitSpec parse_circuit(std::string_view text, std::size_t n_qubits) {
  CircuitSpec circuit{n_qubits, {}};
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream fields(raw);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty() || tokens.front().starts_with('#')) continue;

    const auto& op = tokens.front();
    if (op == "RX" || op == "RZ") {
      if (tokens.size() != 4) throw ParseError(line, op + " expects: qubit angle prob");
      const auto q = parse_number<std::size_t>(tokens[1], line);
      const auto angle = parse_number<double>(tokens[2], line);
      const auto p = parse_number<double>(tokens[3], line);
      circuit.gates.push_back(op == "RX" ? GateOp::rx(q, angle, p) : GateOp::rz(q, angle, p));
    } else if (op == "CNOT") {
      if (tokens.size() != 4) throw ParseError(line, "CNOT expects: control target prob");
      circuit.gates.push_back(GateOp::cnot(parse_number<std::size_t>(tokens[1], line),
                                           parse_number<std::size_t>(tokens[2], line),
                                           parse_number<double>(tokens[3], line)));
    } else {
      throw ParseError(line, fmt::format("unknown gate '{}'", op));
    }
  }
  circuit.validate();
  return circuit;
}

}  // namespace zne::qsim
