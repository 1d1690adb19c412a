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

#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "subscore/sim/pauli.hpp"

namespace subscore::sim {

/// Normalized 2^Q amplitude vector; basis index bit q is qubit q.
class QuantumState {
  public:
    /// |0...0> on `num_qubits` qubits.
    explicit QuantumState(int num_qubits);

    /// Takes ownership of `amplitudes`; throws invalid-input unless the size
    /// is a power of two and the squared norm is 1 within 1e-12.
    explicit QuantumState(Eigen::VectorXcd amplitudes);

    [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] Eigen::Index dim() const noexcept { return amps_.size(); }
    [[nodiscard]] const Eigen::VectorXcd &amplitudes() const noexcept {
        return amps_;
    }

    /// exp(-i theta P / 2) = cos(theta/2) I - i sin(theta/2) P.
    void apply_rotation(const PauliMasks &axis, double theta);
    void apply_cx(int control, int target);
    /// Applies a 2x2 unitary to one qubit.
    void apply_single(int qubit, const Eigen::Matrix2cd &u);

  private:
    int num_qubits_;
    Eigen::VectorXcd amps_;
    Eigen::VectorXcd scratch_;
};

struct EntanglerGate {
    int control = 0;
    int target = 1;
};

struct RotationGate {
    std::vector<Pauli> axis;
    int param = 0;
};

using Gate = std::variant<EntanglerGate, RotationGate>;

/// Ordered gate list G(x) = G_last o ... o G_first acting on |0...0>.
class ParamCircuit {
  public:
    ParamCircuit(int num_qubits, int num_params, std::vector<Gate> gates);

    [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] int num_params() const noexcept { return num_params_; }
    [[nodiscard]] const std::vector<Gate> &gates() const noexcept {
        return gates_;
    }
    /// V_d: how many gates reference parameter d.
    [[nodiscard]] const std::vector<int> &multiplicities() const noexcept {
        return multiplicities_;
    }
    [[nodiscard]] int entangler_count() const;
    /// Cached masks for gate i (meaningful for rotations only).
    [[nodiscard]] const PauliMasks &masks(std::size_t i) const {
        return masks_[i];
    }

  private:
    int num_qubits_;
    int num_params_;
    std::vector<Gate> gates_;
    std::vector<int> multiplicities_;
    std::vector<PauliMasks> masks_;
};

/// RY then RZ on every qubit per block, L+1 blocks, CX(q,q+1) ladder
/// between consecutive blocks. D = 2Q(L+1).
ParamCircuit build_efficient_su2(int num_qubits, int layers);

/// Angles are wrapped mod 2*pi; x.size() must equal num_params().
QuantumState prepare_state(const ParamCircuit &circuit, std::span<const double> x);

/// |<a|b>|, phase invariant.
double fidelity(const QuantumState &a, const QuantumState &b);

} // namespace subscore::sim
