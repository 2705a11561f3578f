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

#include "zne/qsim/density_matrix.hpp"

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cmath>
#include <utility>

#include "zne/errors.hpp"

namespace zne::qsim {

namespace {

// Plain complex product; skips the inf/nan recovery of operator*.
inline Complex mul(Complex a, Complex b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

std::size_t dimension_for(std::size_t n_qubits) {
  if (n_qubits == 0 || n_qubits > kMaxQubits) {
    throw CapacityError(
        fmt::format("density matrix supports 1..{} qubits, got {}", kMaxQubits, n_qubits));
  }
  return std::size_t{1} << n_qubits;
}

}  // namespace

DensityMatrix::DensityMatrix(std::size_t n_qubits, std::vector<Complex> data)
    : n_qubits_(n_qubits), dim_(dimension_for(n_qubits)), data_(std::move(data)) {
  if (data_.size() != dim_ * dim_) {
    throw InvalidInputError(fmt::format("expected {} entries for {} qubits, got {}",
                                        dim_ * dim_, n_qubits, data_.size()));
  }
}

DensityMatrix DensityMatrix::basis_state(std::size_t n_qubits, std::size_t index) {
  const std::size_t dim = dimension_for(n_qubits);
  if (index >= dim) {
    throw IndexError(fmt::format("basis index {} out of range for {} qubits", index, n_qubits));
  }
  std::vector<Complex> data(dim * dim);
  data[index * dim + index] = 1.0;
  return DensityMatrix(n_qubits, std::move(data));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t n_qubits) {
  const std::size_t dim = dimension_for(n_qubits);
  std::vector<Complex> data(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) data[i * dim + i] = 1.0 / static_cast<double>(dim);
  return DensityMatrix(n_qubits, std::move(data));
}

DensityMatrix DensityMatrix::from_entries(std::size_t n_qubits, std::vector<Complex> entries) {
  return DensityMatrix(n_qubits, std::move(entries));
}

Complex DensityMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += data_[i * dim_ + i];
  return t;
}

double DensityMatrix::hermiticity_error() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = r; c < dim_; ++c) {
      worst = std::max(worst, std::abs(data_[r * dim_ + c] - std::conj(data_[c * dim_ + r])));
    }
  }
  return worst;
}

double DensityMatrix::min_eigenvalue() const {
  const auto d = static_cast<Eigen::Index>(dim_);
  Eigen::MatrixXcd m(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      m(r, c) = data_[static_cast<std::size_t>(r) * dim_ + static_cast<std::size_t>(c)];
    }
  }
  const Eigen::MatrixXcd hermitian = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool DensityMatrix::is_physical(double tol, double psd_tol) const {
  const Complex t = trace();
  return std::abs(t.real() - 1.0) <= tol && std::abs(t.imag()) <= tol &&
         hermiticity_error() <= tol && min_eigenvalue() >= -psd_tol;
}

std::size_t DensityMatrix::qubit_mask(std::size_t qubit) const {
  if (qubit >= n_qubits_) {
    throw IndexError(fmt::format("qubit {} out of range for {} qubits", qubit, n_qubits_));
  }
  return std::size_t{1} << (n_qubits_ - 1 - qubit);
}

void DensityMatrix::apply_gate_in_place(const GateOp& gate) {
  switch (gate.kind) {
    case GateKind::kRx: {
      const double c = std::cos(gate.angle / 2.0);
      const double s = std::sin(gate.angle / 2.0);
      apply_single_qubit_unitary(qubit_mask(gate.targets[0]), c, Complex(0.0, -s),
                                 Complex(0.0, -s), c);
      break;
    }
    case GateKind::kRz:
      apply_rz(qubit_mask(gate.targets[0]), gate.angle);
      break;
    case GateKind::kCnot: {
      const auto control = qubit_mask(gate.targets[0]);
      const auto target = qubit_mask(gate.targets[1]);
      if (control == target) throw IndexError("CNOT control and target coincide");
      apply_cnot(control, target);
      break;
    }
  }
  debug_check();
}

void DensityMatrix::depolarize_in_place(std::span<const std::size_t> targets, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidProbabilityError(fmt::format("depolarizing probability {} outside [0, 1]", p));
  }
  if (targets.size() == 1) {
    const auto mask = qubit_mask(targets[0]);
    if (p > 0.0) depolarize_one(mask, p);
  } else if (targets.size() == 2) {
    const auto a = qubit_mask(targets[0]);
    const auto b = qubit_mask(targets[1]);
    if (a == b) throw IndexError("two-qubit depolarizing targets coincide");
    if (p > 0.0) depolarize_two(a, b, p);
  } else {
    throw InvalidInputError(
        fmt::format("depolarizing channel takes 1 or 2 targets, got {}", targets.size()));
  }
  debug_check();
}

void DensityMatrix::apply_single_qubit_unitary(std::size_t mask, Complex u00, Complex u01,
                                               Complex u10, Complex u11) {
  // Rows: rho <- U rho.
  for (std::size_t block = 0; block < dim_; block += 2 * mask) {
    for (std::size_t r = block; r < block + mask; ++r) {
      Complex* row0 = &data_[r * dim_];
      Complex* row1 = &data_[(r | mask) * dim_];
      for (std::size_t c = 0; c < dim_; ++c) {
        const Complex a = row0[c];
        const Complex b = row1[c];
        row0[c] = mul(u00, a) + mul(u01, b);
        row1[c] = mul(u10, a) + mul(u11, b);
      }
    }
  }
  // Columns: rho <- rho U^dagger.
  const Complex v00 = std::conj(u00), v01 = std::conj(u01);
  const Complex v10 = std::conj(u10), v11 = std::conj(u11);
  for (std::size_t r = 0; r < dim_; ++r) {
    Complex* row = &data_[r * dim_];
    for (std::size_t block = 0; block < dim_; block += 2 * mask) {
      for (std::size_t c = block; c < block + mask; ++c) {
        const Complex a = row[c];
        const Complex b = row[c | mask];
        row[c] = mul(a, v00) + mul(b, v01);
        row[c | mask] = mul(a, v10) + mul(b, v11);
      }
    }
  }
}

void DensityMatrix::apply_rz(std::size_t mask, double angle) {
  // Diagonal: rho_rc picks up exp(-i angle (z_r - z_c) / 2) with z = +-1 per bit,
  // so only entries whose target bits differ change.
  const Complex down = std::polar(1.0, -angle);  // row bit 0, column bit 1
  const Complex up = std::polar(1.0, angle);     // row bit 1, column bit 0
  for (std::size_t r = 0; r < dim_; ++r) {
    Complex* row = &data_[r * dim_];
    const bool row_set = (r & mask) != 0;
    const Complex phase = row_set ? up : down;
    const std::size_t first = row_set ? 0 : mask;
    for (std::size_t block = first; block < dim_; block += 2 * mask) {
      for (std::size_t c = block; c < block + mask; ++c) row[c] = mul(row[c], phase);
    }
  }
}

void DensityMatrix::apply_cnot(std::size_t control_mask, std::size_t target_mask) {
  // Permutation pi(x) = x ^ target when the control bit is set; pi is an
  // involution, so swapping rows then columns gives P rho P.
  for (std::size_t r = 0; r < dim_; ++r) {
    if (!(r & control_mask) || (r & target_mask)) continue;
    std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(r * dim_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * dim_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r | target_mask) * dim_));
  }
  for (std::size_t r = 0; r < dim_; ++r) {
    Complex* row = &data_[r * dim_];
    for (std::size_t c = 0; c < dim_; ++c) {
      if (!(c & control_mask) || (c & target_mask)) continue;
      std::swap(row[c], row[c | target_mask]);
    }
  }
}

void DensityMatrix::depolarize_one(std::size_t mask, double p) {
  const double keep = 1.0 - p;
  const double half = 0.5 * p;
  for (std::size_t rblock = 0; rblock < dim_; rblock += 2 * mask) {
    for (std::size_t r = rblock; r < rblock + mask; ++r) {
      Complex* row0 = &data_[r * dim_];
      Complex* row1 = &data_[(r | mask) * dim_];
      for (std::size_t cblock = 0; cblock < dim_; cblock += 2 * mask) {
        for (std::size_t c = cblock; c < cblock + mask; ++c) {
          const std::size_t c1 = c | mask;
          const Complex mixed = half * (row0[c] + row1[c1]);
          row0[c] = keep * row0[c] + mixed;
          row1[c1] = keep * row1[c1] + mixed;
          row0[c1] *= keep;
          row1[c] *= keep;
        }
      }
    }
  }
}

void DensityMatrix::depolarize_two(std::size_t mask_a, std::size_t mask_b, double p) {
  const double keep = 1.0 - p;
  const std::size_t both = mask_a | mask_b;
  const std::array<std::size_t, 4> offsets{0, mask_a, mask_b, both};
  for (std::size_t r = 0; r < dim_; ++r) {
    if (r & both) continue;
    for (std::size_t c = 0; c < dim_; ++c) {
      if (c & both) continue;
      Complex block_trace = 0.0;
      for (std::size_t s : offsets) block_trace += data_[(r | s) * dim_ + (c | s)];
      const Complex mixed = 0.25 * p * block_trace;
      for (std::size_t s : offsets) {
        for (std::size_t t : offsets) {
          Complex& x = data_[(r | s) * dim_ + (c | t)];
          x *= keep;
          if (s == t) x += mixed;
        }
      }
    }
  }
}

void DensityMatrix::debug_check() const {
#ifndef NDEBUG
  const Complex t = trace();
  assert(std::abs(t - Complex(1.0, 0.0)) <= 1e-10);
  assert(hermiticity_error() <= 1e-10);
#endif
}

DensityMatrix apply_gate(DensityMatrix rho, const GateOp& gate) {
  rho.apply_gate_in_place(gate);
  return rho;
}

DensityMatrix depolarize(DensityMatrix rho, std::span<const std::size_t> targets, double p) {
  rho.depolarize_in_place(targets, p);
  return rho;
}

DensityMatrix run_circuit(std::size_t initial_state, const CircuitSpec& circuit) {
  circuit.validate();
  auto rho = DensityMatrix::basis_state(circuit.n_qubits, initial_state);
  for (const auto& gate : circuit.gates) {
    rho.apply_gate_in_place(gate);
    if (gate.error_prob > 0.0) {
      rho.depolarize_in_place(std::span<const std::size_t>(gate.targets.data(), gate.arity()),
                              gate.error_prob);
    }
  }
  return rho;
}

double basis_magnetization(std::size_t index, std::size_t n_qubits) {
  const auto down = static_cast<double>(std::popcount(index));
  const auto n = static_cast<double>(n_qubits);
  return (n - 2.0 * down) / n;
}

double magnetization_expectation(const DensityMatrix& rho) {
  double m = 0.0;
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    m += rho(i, i).real() * basis_magnetization(i, rho.n_qubits());
  }
  return m;
}

}  // namespace zne::qsim
