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
#include "subscore/sim/hamiltonian.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "subscore/error.hpp"

namespace subscore::sim {

namespace {

bool qubitwise_compatible(const std::vector<Pauli> &group_letters,
                          const std::vector<Pauli> &term) {
    for (std::size_t q = 0; q < term.size(); ++q) {
        if (term[q] != Pauli::I && group_letters[q] != Pauli::I &&
            term[q] != group_letters[q]) {
            return false;
        }
    }
    return true;
}

} // namespace

Hamiltonian::Hamiltonian(int num_qubits, std::vector<PauliTerm> terms)
    : num_qubits_(num_qubits), terms_(std::move(terms)) {
    if (num_qubits < 1) {
        throw Error(ErrorKind::InvalidConfig, "Hamiltonian needs >= 1 qubit");
    }
    std::vector<std::vector<Pauli>> group_letters;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const auto &t = terms_[k];
        if (!std::isfinite(t.coefficient) || t.coefficient == 0.0) {
            throw Error(ErrorKind::InvalidInput,
                        "term coefficient must be finite and nonzero");
        }
        if (static_cast<int>(t.letters.size()) != num_qubits) {
            throw Error(ErrorKind::InvalidInput, "term length != Q");
        }
        masks_.push_back(t.masks());
        bool placed = false;
        for (std::size_t g = 0; g < groups_.size() && !placed; ++g) {
            if (qubitwise_compatible(group_letters[g], t.letters)) {
                groups_[g].push_back(k);
                for (std::size_t q = 0; q < t.letters.size(); ++q) {
                    if (t.letters[q] != Pauli::I) {
                        group_letters[g][q] = t.letters[q];
                    }
                }
                placed = true;
            }
        }
        if (!placed) {
            groups_.push_back({k});
            group_letters.push_back(t.letters);
        }
    }
}

std::vector<Pauli> Hamiltonian::group_basis(std::size_t g) const {
    std::vector<Pauli> basis(static_cast<std::size_t>(num_qubits_), Pauli::I);
    for (std::size_t k : groups_.at(g)) {
        for (std::size_t q = 0; q < basis.size(); ++q) {
            if (terms_[k].letters[q] != Pauli::I) {
                basis[q] = terms_[k].letters[q];
            }
        }
    }
    return basis;
}

double Hamiltonian::coefficient_one_norm() const {
    double s = 0.0;
    for (const auto &t : terms_) {
        s += std::abs(t.coefficient);
    }
    return s;
}

Eigen::VectorXcd Hamiltonian::apply(const Eigen::VectorXcd &psi) const {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(psi.size());
    Eigen::VectorXcd tmp;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        apply_pauli(masks_[k], psi, tmp);
        out += terms_[k].coefficient * tmp;
    }
    return out;
}

Eigen::VectorXcd Hamiltonian::apply_group(std::size_t g,
                                          const Eigen::VectorXcd &psi) const {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(psi.size());
    Eigen::VectorXcd tmp;
    for (std::size_t k : groups_.at(g)) {
        apply_pauli(masks_[k], psi, tmp);
        out += terms_[k].coefficient * tmp;
    }
    return out;
}

Eigen::MatrixXcd Hamiltonian::dense_matrix() const {
    const Eigen::Index dim = Eigen::Index{1} << num_qubits_;
    Eigen::MatrixXcd m(dim, dim);
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        e.setZero();
        e[j] = 1.0;
        m.col(j) = apply(e);
    }
    return m;
}

Hamiltonian build_heisenberg(int num_qubits, const std::array<double, 3> &J,
                             const std::array<double, 3> &h) {
    if (num_qubits < 2) {
        throw Error(ErrorKind::InvalidConfig, "Heisenberg chain needs Q >= 2");
    }
    constexpr std::array<Pauli, 3> axes{Pauli::X, Pauli::Y, Pauli::Z};
    const auto n = static_cast<std::size_t>(num_qubits);
    std::vector<PauliTerm> terms;
    for (std::size_t i = 0; i < 3; ++i) {
        if (J[i] != 0.0) {
            for (std::size_t j = 0; j + 1 < n; ++j) {
                std::vector<Pauli> letters(n, Pauli::I);
                letters[j] = axes[i];
                letters[j + 1] = axes[i];
                terms.push_back({-J[i], std::move(letters)});
            }
        }
        if (h[i] != 0.0) {
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<Pauli> letters(n, Pauli::I);
                letters[j] = axes[i];
                terms.push_back({-h[i], std::move(letters)});
            }
        }
    }
    return Hamiltonian(num_qubits, std::move(terms));
}

Hamiltonian build_critical_ising(int num_qubits) {
    return build_heisenberg(num_qubits, {-1.0, 0.0, 0.0}, {0.0, 0.0, -1.0});
}

double exact_energy(const Hamiltonian &H, const QuantumState &psi) {
    if (H.num_qubits() != psi.num_qubits()) {
        throw Error(ErrorKind::InvalidInput, "qubit count mismatch");
    }
    const std::complex<double> e = psi.amplitudes().dot(H.apply(psi.amplitudes()));
    if (std::abs(e.imag()) > 1e-8) {
        throw Error(ErrorKind::InternalConsistency,
                    "energy has imaginary part " + std::to_string(e.imag()));
    }
    return e.real();
}

GroundState ground_truth(const Hamiltonian &H) {
    if (H.num_qubits() > 12) {
        throw Error(ErrorKind::UnsupportedScale,
                    "dense diagonalization limited to 12 qubits");
    }
    const Eigen::MatrixXcd m = H.dense_matrix();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::NumericalFailure, "eigensolver did not converge");
    }
    Eigen::VectorXcd v = solver.eigenvectors().col(0);
    v.normalize();
    return {solver.eigenvalues()[0], QuantumState(std::move(v))};
}

double estimate_single_shot_variance(const Hamiltonian &H, const QuantumState &psi) {
    double total = 0.0;
    for (std::size_t g = 0; g < H.groups().size(); ++g) {
        const Eigen::VectorXcd phi = H.apply_group(g, psi.amplitudes());
        const double mean = psi.amplitudes().dot(phi).real();
        total += std::max(0.0, phi.squaredNorm() - mean * mean);
    }
    return total;
}

} // namespace subscore::sim
