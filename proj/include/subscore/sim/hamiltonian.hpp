// Copyright 2026 The SubsCoRe Authors.
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
#include <vector>

#include <Eigen/Dense>

#include "subscore/sim/circuit.hpp"
#include "subscore/sim/pauli.hpp"

namespace subscore::sim {

/// Weighted Pauli strings, partitioned into qubit-wise commuting
/// measurement groups (greedy first-fit in term order).
class Hamiltonian {
  public:
    Hamiltonian(int num_qubits, std::vector<PauliTerm> terms);

    [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] const std::vector<PauliTerm> &terms() const noexcept {
        return terms_;
    }
    [[nodiscard]] const std::vector<std::vector<std::size_t>> &groups() const noexcept {
        return groups_;
    }
    /// Non-identity letter per qubit shared by every term of group g.
    [[nodiscard]] std::vector<Pauli> group_basis(std::size_t g) const;
    [[nodiscard]] double coefficient_one_norm() const;

    /// H|psi>.
    [[nodiscard]] Eigen::VectorXcd apply(const Eigen::VectorXcd &psi) const;
    /// (sum over terms in group g of c P)|psi>.
    [[nodiscard]] Eigen::VectorXcd apply_group(std::size_t g,
                                               const Eigen::VectorXcd &psi) const;
    [[nodiscard]] Eigen::MatrixXcd dense_matrix() const;

  private:
    int num_qubits_;
    std::vector<PauliTerm> terms_;
    std::vector<PauliMasks> masks_;
    std::vector<std::vector<std::size_t>> groups_;
};

/// Open-boundary Heisenberg chain
///   H = -sum_{i in XYZ} [ sum_j J_i s^i_j s^i_{j+1} + sum_j h_i s^i_j ].
/// Zero coefficients are omitted.
Hamiltonian build_heisenberg(int num_qubits, const std::array<double, 3> &J,
                             const std::array<double, 3> &h);

/// Transverse-field Ising chain at criticality, J = (-1,0,0), h = (0,0,-1).
Hamiltonian build_critical_ising(int num_qubits);

double exact_energy(const Hamiltonian &H, const QuantumState &psi);

struct GroundState {
    double energy = 0.0;
    QuantumState state;
};

/// Dense diagonalization; throws unsupported-scale above 2^12 amplitudes.
GroundState ground_truth(const Hamiltonian &H);

/// Sum over groups of <O_g^2> - <O_g>^2, i.e. the variance of a one-shot
/// per group estimate of the energy.
double estimate_single_shot_variance(const Hamiltonian &H, const QuantumState &psi);

} // namespace subscore::sim
