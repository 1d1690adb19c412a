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

#include <cstdint>
#include <random>
#include <span>

#include "subscore/sim/circuit.hpp"
#include "subscore/sim/hamiltonian.hpp"

namespace subscore::sim {

using Rng = std::mt19937_64;

enum class NoiseKind {
    GaussianExact, ///< exact energy plus N(0, eta2 / shots)
    Sampled,       ///< per-group bitstring sampling in the measurement basis
};

struct NoiseModel {
    NoiseKind kind = NoiseKind::GaussianExact;
    /// Single-shot variance; must be > 0.
    double eta2 = 1.0;
};

struct Observation {
    double value = 0.0;
    /// Variance the GP is told about: eta2 / shots.
    double variance = 0.0;
};

/// One energy estimate from `shots` shots per operator group.
Observation observe(const ParamCircuit &circuit, const Hamiltonian &H,
                    std::span<const double> x, std::int64_t shots,
                    const NoiseModel &noise, Rng &rng);

/// Sampled-mode estimator on an already prepared state.
double sample_energy(const Hamiltonian &H, const QuantumState &psi,
                     std::int64_t shots, Rng &rng);

/// Circuit + Hamiltonian + cached ground state: the exact side of a VQE
/// benchmark (energies and the two error metrics).
class VqeProblem {
  public:
    VqeProblem(ParamCircuit circuit, Hamiltonian hamiltonian);

    [[nodiscard]] const ParamCircuit &circuit() const noexcept { return circuit_; }
    [[nodiscard]] const Hamiltonian &hamiltonian() const noexcept { return hamiltonian_; }
    [[nodiscard]] const GroundState &ground() const noexcept { return ground_; }

    [[nodiscard]] double energy(std::span<const double> x) const;
    [[nodiscard]] double delta_energy(std::span<const double> x) const;
    [[nodiscard]] double delta_fidelity(std::span<const double> x) const;
    [[nodiscard]] double single_shot_variance(std::span<const double> x) const;

  private:
    ParamCircuit circuit_;
    Hamiltonian hamiltonian_;
    GroundState ground_;
};

} // namespace subscore::sim
