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
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "subscore/optim/optimizer.hpp"

namespace subscore::harness {

enum class NoiseSource {
    Gaussian, ///< exact energy plus Gaussian shot noise
    Sampled,  ///< bitstring sampling per operator group
    None,     ///< exact energies, nominal eta2 for bookkeeping
};

const char *to_string(NoiseSource n);
NoiseSource parse_noise(const std::string &name);

/// Everything that determines an experiment's outputs.
struct RunConfig {
    int n_qubits = 5;
    int n_layers = 3;
    std::string circuit = "esu2";
    bool pbc = false;
    std::string kernel = "vqe";
    std::array<double, 3> J{-1.0, 0.0, 0.0};
    std::array<double, 3> h{0.0, 0.0, -1.0};

    optim::OptimizerConfig optimizer;

    NoiseSource noise = NoiseSource::Gaussian;
    /// Single-shot variance; 0 estimates it at each trial's start point.
    double eta2 = 0.0;
    double noiseless_eta2 = 1e-8;

    std::vector<std::uint64_t> seeds{0};
    std::vector<double> quantiles{0.25, 0.5, 0.75};
    int workers = 0; ///< 0 = hardware concurrency
    std::string output_csv;
    std::string output_json;

    /// Throws invalid-config (also for options this build does not model,
    /// such as periodic boundaries).
    void validate() const;

    friend bool operator==(const RunConfig &, const RunConfig &) = default;
};

/// JSON text, parse(render(c)) == c exactly.
std::string render_config(const RunConfig &config);
RunConfig parse_config(const std::string &text);
RunConfig load_config(const std::filesystem::path &path);
void save_config(const RunConfig &config, const std::filesystem::path &path);

/// "0-19", "1,4,7" or a mix such as "0-3,10".
std::vector<std::uint64_t> parse_seed_list(const std::string &text);

} // namespace subscore::harness
