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
#include "subscore/sim/observe.hpp"

#include <bit>
#include <cmath>
#include <complex>

#include "subscore/error.hpp"

namespace subscore::sim {

namespace {

// Rotations U with U^dag Z U = P, applied before a computational-basis readout.
void rotate_to_basis(QuantumState &state, const std::vector<Pauli> &basis) {
    const double r = 1.0 / std::sqrt(2.0);
    Eigen::Matrix2cd hadamard;
    hadamard << r, r, r, -r;
    Eigen::Matrix2cd hs_dag; // H * S^dag
    hs_dag << r, std::complex<double>(0.0, -r), r, std::complex<double>(0.0, r);
    for (std::size_t q = 0; q < basis.size(); ++q) {
        if (basis[q] == Pauli::X) {
            state.apply_single(static_cast<int>(q), hadamard);
        } else if (basis[q] == Pauli::Y) {
            state.apply_single(static_cast<int>(q), hs_dag);
        }
    }
}

} // namespace

double sample_energy(const Hamiltonian &H, const QuantumState &psi,
                     std::int64_t shots, Rng &rng) {
    double total = 0.0;
    const auto dim = static_cast<std::uint64_t>(psi.dim());
    std::vector<double> eigen(dim);
    for (std::size_t g = 0; g < H.groups().size(); ++g) {
        QuantumState rotated = psi;
        rotate_to_basis(rotated, H.group_basis(g));
        for (std::uint64_t b = 0; b < dim; ++b) {
            double e = 0.0;
            for (std::size_t k : H.groups()[g]) {
                const auto &t = H.terms()[k];
                const bool odd = (std::popcount(b & t.masks().support()) & 1) != 0;
                e += odd ? -t.coefficient : t.coefficient;
            }
            eigen[b] = e;
        }
        // Multinomial draw by sequential conditional binomials.
        std::int64_t remaining = shots;
        double mass_left = 1.0;
        double acc = 0.0;
        for (std::uint64_t b = 0; b < dim && remaining > 0; ++b) {
            const double p = std::norm(rotated.amplitudes()[static_cast<Eigen::Index>(b)]);
            std::int64_t count = remaining;
            if (b + 1 < dim && mass_left > 0.0) {
                const double cond = std::clamp(p / mass_left, 0.0, 1.0);
                std::binomial_distribution<std::int64_t> draw(remaining, cond);
                count = draw(rng);
            }
            acc += static_cast<double>(count) * eigen[b];
            remaining -= count;
            mass_left -= p;
        }
        total += acc / static_cast<double>(shots);
    }
    return total;
}

Observation observe(const ParamCircuit &circuit, const Hamiltonian &H,
                    std::span<const double> x, std::int64_t shots,
                    const NoiseModel &noise, Rng &rng) {
    if (shots < 1) {
        throw Error(ErrorKind::InvalidConfig, "shot count must be >= 1");
    }
    if (!(noise.eta2 > 0.0)) {
        throw Error(ErrorKind::InvalidConfig, "single-shot variance must be > 0");
    }
    const QuantumState psi = prepare_state(circuit, x);
    const double variance = noise.eta2 / static_cast<double>(shots);
    if (noise.kind == NoiseKind::GaussianExact) {
        std::normal_distribution<double> gauss(0.0, std::sqrt(variance));
        return {exact_energy(H, psi) + gauss(rng), variance};
    }
    return {sample_energy(H, psi, shots, rng), variance};
}

VqeProblem::VqeProblem(ParamCircuit circuit, Hamiltonian hamiltonian)
    : circuit_(std::move(circuit)), hamiltonian_(std::move(hamiltonian)),
      ground_(ground_truth(hamiltonian_)) {
    if (circuit_.num_qubits() != hamiltonian_.num_qubits()) {
        throw Error(ErrorKind::InvalidConfig, "circuit and Hamiltonian disagree on Q");
    }
}

double VqeProblem::energy(std::span<const double> x) const {
    return exact_energy(hamiltonian_, prepare_state(circuit_, x));
}

double VqeProblem::delta_energy(std::span<const double> x) const {
    return energy(x) - ground_.energy;
}

double VqeProblem::delta_fidelity(std::span<const double> x) const {
    return 1.0 - fidelity(ground_.state, prepare_state(circuit_, x));
}

double VqeProblem::single_shot_variance(std::span<const double> x) const {
    return estimate_single_shot_variance(hamiltonian_, prepare_state(circuit_, x));
}

} // namespace subscore::sim
