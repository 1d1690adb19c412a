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
#include "subscore/sim/pauli.hpp"

#include <bit>

#include "subscore/error.hpp"

namespace subscore::sim {

char to_char(Pauli p) {
    switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
    }
    return '?';
}

std::vector<Pauli> parse_pauli_string(std::string_view letters) {
    std::vector<Pauli> out;
    out.reserve(letters.size());
    for (char c : letters) {
        switch (c) {
        case 'I': out.push_back(Pauli::I); break;
        case 'X': out.push_back(Pauli::X); break;
        case 'Y': out.push_back(Pauli::Y); break;
        case 'Z': out.push_back(Pauli::Z); break;
        default:
            throw Error(ErrorKind::InvalidInput,
                        std::string("unknown Pauli letter '") + c + "'");
        }
    }
    return out;
}

PauliMasks PauliMasks::from_letters(const std::vector<Pauli> &letters) {
    if (letters.size() > 62) {
        throw Error(ErrorKind::UnsupportedScale, "Pauli string longer than 62");
    }
    PauliMasks m;
    for (std::size_t q = 0; q < letters.size(); ++q) {
        const std::uint64_t bit = std::uint64_t{1} << q;
        switch (letters[q]) {
        case Pauli::I: break;
        case Pauli::X: m.x_mask |= bit; break;
        case Pauli::Y:
            m.x_mask |= bit;
            m.z_mask |= bit;
            ++m.num_y;
            break;
        case Pauli::Z: m.z_mask |= bit; break;
        }
    }
    return m;
}

namespace {

std::complex<double> i_power(int n) {
    switch (n & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
    }
}

} // namespace

void apply_pauli(const PauliMasks &masks, const Eigen::VectorXcd &in,
                 Eigen::VectorXcd &out) {
    const auto dim = static_cast<std::uint64_t>(in.size());
    out.resize(in.size());
    const std::complex<double> global = i_power(masks.num_y);
    for (std::uint64_t b = 0; b < dim; ++b) {
        const bool odd = (std::popcount(b & masks.z_mask) & 1) != 0;
        out[static_cast<Eigen::Index>(b ^ masks.x_mask)] =
            (odd ? -global : global) * in[static_cast<Eigen::Index>(b)];
    }
}

std::complex<double> pauli_expectation(const PauliMasks &masks,
                                       const Eigen::VectorXcd &psi) {
    const auto dim = static_cast<std::uint64_t>(psi.size());
    std::complex<double> acc{0.0, 0.0};
    for (std::uint64_t b = 0; b < dim; ++b) {
        const bool odd = (std::popcount(b & masks.z_mask) & 1) != 0;
        const auto amp = psi[static_cast<Eigen::Index>(b)];
        const auto img = psi[static_cast<Eigen::Index>(b ^ masks.x_mask)];
        const std::complex<double> term = std::conj(img) * amp;
        acc += odd ? -term : term;
    }
    return acc * i_power(masks.num_y);
}

} // namespace subscore::sim
