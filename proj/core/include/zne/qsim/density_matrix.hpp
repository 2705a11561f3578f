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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "zne/qsim/circuit.hpp"

namespace zne::qsim {

using Complex = std::complex<double>;

/// Largest register a dense density matrix is allocated for.
inline constexpr std::size_t kMaxQubits = 14;

/// Dense 2^n x 2^n density operator, stored row-major.
///
/// Qubit q corresponds to bit (n - 1 - q) of a basis index, so qubit 0 is the
/// leftmost label in |q0 q1 ... q_{n-1}>.
class DensityMatrix {
 public:
  /// |index><index|.
  static DensityMatrix basis_state(std::size_t n_qubits, std::size_t index);
  /// I / 2^n.
  static DensityMatrix maximally_mixed(std::size_t n_qubits);
  /// Row-major entries of a 2^n x 2^n matrix. No physicality checks.
  static DensityMatrix from_entries(std::size_t n_qubits, std::vector<Complex> entries);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return dim_; }

  Complex operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }
  std::span<const Complex> entries() const noexcept { return data_; }

  Complex trace() const;
  /// max |rho_ij - conj(rho_ji)|.
  double hermiticity_error() const;
  /// Smallest eigenvalue of the Hermitian part.
  double min_eigenvalue() const;
  /// Unit trace and Hermiticity within `tol`, eigenvalues >= -psd_tol.
  bool is_physical(double tol = 1e-10, double psd_tol = 1e-9) const;

  /// Bit of a basis index that belongs to `qubit`.
  std::size_t qubit_mask(std::size_t qubit) const;

  // In-place kernels; the free functions below wrap these.
  void apply_gate_in_place(const GateOp& gate);
  void depolarize_in_place(std::span<const std::size_t> targets, double p);

 private:
  DensityMatrix(std::size_t n_qubits, std::vector<Complex> data);

  void apply_single_qubit_unitary(std::size_t mask, Complex u00, Complex u01, Complex u10,
                                  Complex u11);
  void apply_rz(std::size_t mask, double angle);
  void apply_cnot(std::size_t control_mask, std::size_t target_mask);
  void depolarize_one(std::size_t mask, double p);
  void depolarize_two(std::size_t mask_a, std::size_t mask_b, double p);
  void debug_check() const;

  std::size_t n_qubits_ = 0;
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// rho -> U rho U^dagger. Does not apply the gate's noise channel.
DensityMatrix apply_gate(DensityMatrix rho, const GateOp& gate);

/// (1 - p) rho + p (I_targets / 2^k (x) Tr_targets rho) for one or two targets.
DensityMatrix depolarize(DensityMatrix rho, std::span<const std::size_t> targets, double p);

/// Starts from |initial_state><initial_state| and applies every gate followed
/// by the depolarizing channel on its targets with the gate's error_prob.
DensityMatrix run_circuit(std::size_t initial_state, const CircuitSpec& circuit);

/// Magnetization (1/n) sum_j (1 - 2 b_j) of a computational basis index.
double basis_magnetization(std::size_t index, std::size_t n_qubits);

/// (1/n) sum_j Tr(rho Z_j).
double magnetization_expectation(const DensityMatrix& rho);

}  // namespace zne::qsim
