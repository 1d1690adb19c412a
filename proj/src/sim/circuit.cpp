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
#include "subscore/sim/circuit.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "subscore/error.hpp"

namespace subscore::sim {

namespace {

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

int log2_exact(Eigen::Index n) {
    int q = 0;
    while ((Eigen::Index{1} << q) < n) {
        ++q;
    }
    return q;
}

} // namespace

QuantumState::QuantumState(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > 20) {
        throw Error(ErrorKind::UnsupportedScale,
                    "qubit count must be in [1, 20], got " +
                        std::to_string(num_qubits));
    }
    amps_ = Eigen::VectorXcd::Zero(Eigen::Index{1} << num_qubits);
    amps_[0] = 1.0;
}

QuantumState::QuantumState(Eigen::VectorXcd amplitudes)
    : num_qubits_(0), amps_(std::move(amplitudes)) {
    if (!is_power_of_two(amps_.size()) || amps_.size() < 2) {
        throw Error(ErrorKind::InvalidInput,
                    "amplitude count must be a power of two >= 2");
    }
    if (std::abs(amps_.squaredNorm() - 1.0) > 1e-12) {
        throw Error(ErrorKind::InvalidInput, "state is not normalized");
    }
    num_qubits_ = log2_exact(amps_.size());
}

void QuantumState::apply_rotation(const PauliMasks &axis, double theta) {
    apply_pauli(axis, amps_, scratch_);
    const double c = std::cos(0.5 * theta);
    const std::complex<double> mis{0.0, -std::sin(0.5 * theta)};
    amps_ = c * amps_ + mis * scratch_;
}

void QuantumState::apply_cx(int control, int target) {
    const Eigen::Index cbit = Eigen::Index{1} << control;
    const Eigen::Index tbit = Eigen::Index{1} << target;
    for (Eigen::Index b = 0; b < amps_.size(); ++b) {
        if ((b & cbit) != 0 && (b & tbit) == 0) {
            std::swap(amps_[b], amps_[b | tbit]);
        }
    }
}

void QuantumState::apply_single(int qubit, const Eigen::Matrix2cd &u) {
    const Eigen::Index bit = Eigen::Index{1} << qubit;
    for (Eigen::Index b = 0; b < amps_.size(); ++b) {
        if ((b & bit) == 0) {
            const auto a0 = amps_[b];
            const auto a1 = amps_[b | bit];
            amps_[b] = u(0, 0) * a0 + u(0, 1) * a1;
            amps_[b | bit] = u(1, 0) * a0 + u(1, 1) * a1;
        }
    }
}

ParamCircuit::ParamCircuit(int num_qubits, int num_params, std::vector<Gate> gates)
    : num_qubits_(num_qubits), num_params_(num_params), gates_(std::move(gates)),
      multiplicities_(static_cast<std::size_t>(std::max(num_params, 0)), 0) {
    if (num_qubits < 1 || num_params < 0) {
        throw Error(ErrorKind::InvalidConfig, "circuit needs >= 1 qubit");
    }
    masks_.resize(gates_.size());
    for (std::size_t i = 0; i < gates_.size(); ++i) {
        if (const auto *cx = std::get_if<EntanglerGate>(&gates_[i])) {
            if (cx->control < 0 || cx->control >= num_qubits || cx->target < 0 ||
                cx->target >= num_qubits || cx->control == cx->target) {
                throw Error(ErrorKind::InvalidConfig, "bad entangler qubits");
            }
            continue;
        }
        const auto &rot = std::get<RotationGate>(gates_[i]);
        if (rot.param < 0 || rot.param >= num_params) {
            throw Error(ErrorKind::InvalidConfig,
                        "rotation parameter index out of range: " +
                            std::to_string(rot.param));
        }
        if (static_cast<int>(rot.axis.size()) != num_qubits) {
            throw Error(ErrorKind::InvalidConfig, "rotation axis length != Q");
        }
        ++multiplicities_[static_cast<std::size_t>(rot.param)];
        masks_[i] = PauliMasks::from_letters(rot.axis);
    }
}

int ParamCircuit::entangler_count() const {
    int n = 0;
    for (const auto &g : gates_) {
        n += std::holds_alternative<EntanglerGate>(g) ? 1 : 0;
    }
    return n;
}

ParamCircuit build_efficient_su2(int num_qubits, int layers) {
    if (num_qubits < 2) {
        throw Error(ErrorKind::InvalidConfig, "EfficientSU2 needs Q >= 2");
    }
    if (layers < 0) {
        throw Error(ErrorKind::InvalidConfig, "layer count must be >= 0");
    }
    std::vector<Gate> gates;
    int param = 0;
    auto single = [num_qubits](int q, Pauli p) {
        std::vector<Pauli> axis(static_cast<std::size_t>(num_qubits), Pauli::I);
        axis[static_cast<std::size_t>(q)] = p;
        return axis;
    };
    for (int block = 0; block <= layers; ++block) {
        if (block > 0) {
            for (int q = 0; q + 1 < num_qubits; ++q) {
                gates.emplace_back(EntanglerGate{q, q + 1});
            }
        }
        for (int q = 0; q < num_qubits; ++q) {
            gates.emplace_back(RotationGate{single(q, Pauli::Y), param++});
        }
        for (int q = 0; q < num_qubits; ++q) {
            gates.emplace_back(RotationGate{single(q, Pauli::Z), param++});
        }
    }
    return ParamCircuit(num_qubits, param, std::move(gates));
}

QuantumState prepare_state(const ParamCircuit &circuit, std::span<const double> x) {
    if (static_cast<int>(x.size()) != circuit.num_params()) {
        throw Error(ErrorKind::InvalidInput, "angle vector length != D");
    }
    QuantumState state(circuit.num_qubits());
    const auto &gates = circuit.gates();
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (const auto *cx = std::get_if<EntanglerGate>(&gates[i])) {
            state.apply_cx(cx->control, cx->target);
        } else {
            const auto &rot = std::get<RotationGate>(gates[i]);
            const double theta =
                std::fmod(x[static_cast<std::size_t>(rot.param)], 2.0 * std::numbers::pi);
            state.apply_rotation(circuit.masks(i), theta);
        }
    }
    return state;
}

double fidelity(const QuantumState &a, const QuantumState &b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorKind::InvalidInput, "state dimension mismatch");
    }
    return std::min(1.0, std::abs(a.amplitudes().dot(b.amplitudes())));
}

} // namespace subscore::sim
