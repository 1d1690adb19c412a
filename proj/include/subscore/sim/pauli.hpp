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

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace subscore::sim {

enum class Pauli : std::uint8_t { I, X, Y, Z };

char to_char(Pauli p);

/// Parses a string such as "XIZ"; letter q acts on qubit q.
std::vector<Pauli> parse_pauli_string(std::string_view letters);

/// Bit masks of a Pauli string acting on basis state |b>, qubit q = bit q.
///   P|b> = i^num_y * (-1)^popcount(b & z_mask) |b ^ x_mask>
struct PauliMasks {
    std::uint64_t x_mask = 0;
    std::uint64_t z_mask = 0;
    int num_y = 0;

    static PauliMasks from_letters(const std::vector<Pauli> &letters);

    [[nodiscard]] std::uint64_t support() const { return x_mask | z_mask; }
};

/// out = P * in. `out` must not alias `in`.
void apply_pauli(const PauliMasks &masks, const Eigen::VectorXcd &in,
                 Eigen::VectorXcd &out);

/// <psi| P |psi>, real because P is Hermitian (imaginary part discarded).
std::complex<double> pauli_expectation(const PauliMasks &masks,
                                       const Eigen::VectorXcd &psi);

struct PauliTerm {
    double coefficient = 0.0;
    std::vector<Pauli> letters;

    [[nodiscard]] PauliMasks masks() const {
        return PauliMasks::from_letters(letters);
    }
    friend bool operator==(const PauliTerm &, const PauliTerm &) = default;
};

} // namespace subscore::sim
