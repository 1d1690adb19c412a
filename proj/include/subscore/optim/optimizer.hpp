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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "subscore/gp/compress.hpp"
#include "subscore/gp/loo.hpp"
#include "subscore/gp/model.hpp"
#include "subscore/optim/allocation.hpp"
#include "subscore/optim/channel.hpp"
#include "subscore/optim/schedule.hpp"
#include "subscore/sim/observe.hpp"

namespace subscore::optim {

enum class Variant {
    Nft,            ///< fixed shots, carried center value
    SubscoreBound,  ///< equal shots everywhere from the uniform-variance bound
    SubscoreCenter, ///< GP-aware allocation with a relaxed center
};

const char *to_string(Variant v);
/// "nft", "bound", "center"; throws invalid-config otherwise.
Variant parse_variant(const std::string &name);

struct OptimizerConfig {
    Variant variant = Variant::SubscoreCenter;
    ScheduleParams schedule;
    gp::GammaSearch gamma_search;
    gp::CompressionPolicy compression;
    std::string gamma_refit = "100*1+20*9+10*100";
    double initial_gamma2 = 4.0;
    /// Prior std of the GP; 0 picks the Hamiltonian coefficient 1-norm.
    double sigma0 = 0.0;
    /// Use the initial observation as the GP's constant prior mean.
    bool prior_mean_from_start = false;
    int nft_shots = 1024;
    /// NFT re-measures its center every this many steps; 0 never, -1 every D.
    int nft_recal_interval = -1;
    int line_grid = gp::kDefaultLineGrid;
    std::int64_t budget = 3'000'000;
    /// Extra stop after this many steps (0 = budget only).
    long max_steps = 0;

    /// Throws invalid-config.
    void validate() const;

    friend bool operator==(const OptimizerConfig &, const OptimizerConfig &) = default;
};

struct OptimizerState {
    long t = 0;
    std::size_t axis = 0;
    gp::Point x_hat;
    double y_hat = 0.0;
    double kappa2 = 0.0;
    std::vector<double> history; ///< y_hat after every step
    std::int64_t cum_shots = 0;
    double eta2 = 1.0;
    std::vector<int> orders; ///< V_d per axis
    std::optional<gp::GPModel> gp;
};

/// What happened inside one SubsCoRe step, for audits.
struct StepContext {
    const gp::GPModel *prepared = nullptr; ///< model the allocation was planned on
    const gp::GPModel *updated = nullptr;  ///< model after the new observations
    gp::Point center;
    std::size_t axis = 0;
    double kappa2 = 0.0; ///< threshold the allocation targeted
    ShotAllocation allocation;
};
using StepHook = std::function<void(const StepContext &)>;

/// Initial state: one observation at x0 (kappa0_shots for SubsCoRe,
/// nft_shots for NFT), counted toward cum_shots.
OptimizerState initialize(const OptimizerConfig &config, const sim::ParamCircuit &circuit,
                          const sim::Hamiltonian &H, ObservationChannel &channel,
                          const gp::Point &x0);

/// The GP with compression and the scheduled gamma refit applied, ready
/// for planning step state.t + 1.
gp::GPModel prepare_model(const OptimizerState &state, const OptimizerConfig &config);

OptimizerState subscore_step(OptimizerState state, const OptimizerConfig &config,
                             ObservationChannel &channel, const StepHook &hook = {});

OptimizerState nft_step(OptimizerState state, const OptimizerConfig &config,
                        ObservationChannel &channel);

struct TraceRow {
    long step = 0;
    std::size_t axis = 0;
    std::int64_t shots_step = 0;
    std::int64_t cum_shots = 0;
    double kappa = 0.0; ///< CoRe threshold std used (NFT: observation std)
    double y_hat = 0.0;
    double delta_energy = 0.0;
    double delta_fidelity = 0.0;

    friend bool operator==(const TraceRow &, const TraceRow &) = default;
};

struct OptimizerTrace {
    std::uint64_t seed = 0;
    std::vector<double> x0;
    std::vector<double> x_final;
    double eta2 = 0.0;
    std::vector<TraceRow> rows;

    friend bool operator==(const OptimizerTrace &, const OptimizerTrace &) = default;
};

/// Independent 64-bit seed for sub-stream `stream` of a trial seed (splitmix64).
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream);

/// x0 uniform on [0, 2 pi)^D from its own stream, so every optimizer gets
/// the same start for a given seed.
gp::Point initial_point(std::size_t dim, std::uint64_t seed);

/// Runs until cum_shots >= budget, always taking at least one step. The
/// initial observation has no row of its own but its shots are counted.
OptimizerTrace run(const OptimizerConfig &config, const sim::VqeProblem &problem,
                   ObservationChannel &channel, const gp::Point &x0,
                   const StepHook &hook = {});

} // namespace subscore::optim
