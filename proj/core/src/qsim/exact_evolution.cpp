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

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

#include <complex>

#include "zne/errors.hpp"
#include "zne/qsim/trotter.hpp"

namespace zne::qsim {

namespace {

struct Spectrum {
  Eigen::VectorXd energies;
  Eigen::MatrixXd vectors;
};

Spectrum diagonalize(const IsingModel& model) {
  const std::size_t n = model.graph.n_sites();
  if (n > kMaxExactSites) {
    throw CapacityError(
        fmt::format("exact evolution supports at most {} sites, got {}", kMaxExactSites, n));
  }
  const auto dim = Eigen::Index{1} << n;
  auto bit = [n](Eigen::Index index, std::size_t site) {
    return (index >> (n - 1 - site)) & 1;
  };

  Eigen::MatrixXd hamiltonian = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    double zz = 0.0;
    for (const auto& [a, b] : model.graph.edges()) zz += bit(i, a) == bit(i, b) ? 1.0 : -1.0;
    hamiltonian(i, i) = -model.j_coupling * zz;
    for (std::size_t site = 0; site < n; ++site) {
      hamiltonian(i ^ (Eigen::Index{1} << (n - 1 - site)), i) = -model.h;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hamiltonian);
  if (solver.info() != Eigen::Success) {
    throw Error("Hamiltonian diagonalization failed");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Eigen::VectorXcd evolve(const Spectrum& s, double t, std::size_t initial_state) {
  const auto dim = s.vectors.rows();
  if (initial_state >= static_cast<std::size_t>(dim)) {
    throw IndexError(fmt::format("basis index {} out of range", initial_state));
  }
  const auto row = static_cast<Eigen::Index>(initial_state);
  Eigen::VectorXcd coeffs(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    coeffs(k) = std::polar(1.0, t * s.energies(k)) * s.vectors(row, k);
  }
  return s.vectors.cast<std::complex<double>>() * coeffs;
}

}  // namespace

DensityMatrix exact_evolution(const IsingModel& model, double t, std::size_t initial_state) {
  const auto spectrum = diagonalize(model);
  const Eigen::VectorXcd psi = evolve(spectrum, t, initial_state);
  const auto dim = static_cast<std::size_t>(psi.size());
  std::vector<Complex> entries(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      entries[r * dim + c] = psi(static_cast<Eigen::Index>(r)) *
                             std::conj(psi(static_cast<Eigen::Index>(c)));
    }
  }
  return DensityMatrix::from_entries(model.graph.n_sites(), std::move(entries));
}

std::vector<double> exact_magnetizations(const IsingModel& model, double t,
                                         std::span<const std::size_t> initial_states) {
  const auto spectrum = diagonalize(model);
  const std::size_t n = model.graph.n_sites();
  std::vector<double> out;
  out.reserve(initial_states.size());
  for (std::size_t state : initial_states) {
    const Eigen::VectorXcd psi = evolve(spectrum, t, state);
    double m = 0.0;
    for (Eigen::Index b = 0; b < psi.size(); ++b) {
      m += std::norm(psi(b)) * basis_magnetization(static_cast<std::size_t>(b), n);
    }
    out.push_back(m);
  }
  return out;
}

}  // namespace zne::qsim
