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
#include "subscore/optim/optimizer.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "subscore/error.hpp"
#include "subscore/gp/core.hpp"
#include "subscore/gp/trig.hpp"

namespace subscore::optim {

namespace {

bool uses_gp(Variant v) { return v != Variant::Nft; }

std::vector<double> as_vector(const gp::Point &p) { return {p.data(), p.data() + p.size()}; }

} // namespace

const char *to_string(Variant v) {
    switch (v) {
    case Variant::Nft: return "nft";
    case Variant::SubscoreBound: return "bound";
    case Variant::SubscoreCenter: return "center";
    }
    return "?";
}

Variant parse_variant(const std::string &name) {
    if (name == "nft") return Variant::Nft;
    if (name == "bound") return Variant::SubscoreBound;
    if (name == "center") return Variant::SubscoreCenter;
    throw Error(ErrorKind::InvalidConfig,
                "unknown optimizer variant '" + name + "' (expected nft, bound or center)");
}

void OptimizerConfig::validate() const {
    schedule.validate();
    if (gamma_search.steps < 1 || !(gamma_search.gamma_min > 0.0) ||
        !(gamma_search.gamma_max >= gamma_search.gamma_min))
        throw Error(ErrorKind::InvalidConfig, "gamma search range is invalid");
    if (compression.keep < 2 || compression.trigger < compression.keep)
        throw Error(ErrorKind::InvalidConfig, "compression needs 2 <= keep <= trigger");
    (void)RefitSchedule(gamma_refit);
    if (!(initial_gamma2 > 0.0) || !std::isfinite(initial_gamma2))
        throw Error(ErrorKind::InvalidConfig, "initial gamma^2 must be positive");
    if (!(sigma0 >= 0.0) || !std::isfinite(sigma0))
        throw Error(ErrorKind::InvalidConfig, "sigma0 must be >= 0 (0 = automatic)");
    if (nft_shots < 1) throw Error(ErrorKind::InvalidConfig, "nft shots must be >= 1");
    if (nft_recal_interval < -1)
        throw Error(ErrorKind::InvalidConfig, "nft recalibration interval must be >= -1");
    if (line_grid < 6) throw Error(ErrorKind::InvalidConfig, "line grid must be >= 6");
    if (budget < 1) throw Error(ErrorKind::InvalidConfig, "shot budget must be positive");
    if (max_steps < 0) throw Error(ErrorKind::InvalidConfig, "max steps must be >= 0");
}

OptimizerState initialize(const OptimizerConfig &config, const sim::ParamCircuit &circuit,
                          const sim::Hamiltonian &H, ObservationChannel &channel,
                          const gp::Point &x0) {
    if (x0.size() != circuit.num_params())
        throw Error(ErrorKind::InvalidInput, "initial point has the wrong dimension");
    OptimizerState s;
    s.eta2 = channel.eta2();
    s.orders = circuit.multiplicities();
    s.x_hat = gp::wrap_point(x0);

    const int shots0 = uses_gp(config.variant) ? config.schedule.kappa0_shots : config.nft_shots;
    const auto x = as_vector(s.x_hat);
    const auto obs = channel.observe(x, shots0);
    s.y_hat = obs.value;
    s.cum_shots = shots0;
    s.kappa2 = s.eta2 / shots0;

    if (uses_gp(config.variant)) {
        const double sigma0 = config.sigma0 > 0.0 ? config.sigma0 : H.coefficient_one_norm();
        gp::KernelParams params{config.initial_gamma2, sigma0 * sigma0, s.orders,
                                config.prior_mean_from_start ? obs.value : 0.0};
        params.validate();
        gp::Dataset data;
        data.append(s.x_hat, obs.value, obs.variance);
        s.gp.emplace(std::move(data), std::move(params));
    }
    return s;
}

gp::GPModel prepare_model(const OptimizerState &state, const OptimizerConfig &config) {
    if (!state.gp) throw Error(ErrorKind::InvalidInput, "state carries no GP");
    gp::KernelParams params = state.gp->params();
    gp::Dataset data = gp::compress(state.gp->data(), params, config.compression);
    if (RefitSchedule(config.gamma_refit).due(state.t + 1))
        params.gamma2 = gp::loo_gamma_search(data, params, config.gamma_search);
    return {std::move(data), std::move(params)};
}

OptimizerState subscore_step(OptimizerState state, const OptimizerConfig &config,
                             ObservationChannel &channel, const StepHook &hook) {
    const gp::GPModel prepared = prepare_model(state, config);
    const std::size_t axis = state.axis;
    const gp::Point center = state.x_hat;
    const double kappa2 = state.kappa2;

    ShotAllocation alloc =
        config.variant == Variant::SubscoreBound
            ? choose_shots_bound(center, axis, state.orders[axis], kappa2, state.eta2)
            : choose_shots_center(prepared, center, axis, kappa2, state.eta2, config.line_grid);

    gp::Dataset data = prepared.data();
    for (std::size_t i = 0; i < alloc.points.size(); ++i) {
        if (alloc.shots[i] == 0) continue;
        const auto obs = channel.observe(as_vector(alloc.points[i]), alloc.shots[i]);
        data.append(alloc.points[i], obs.value, obs.variance);
    }
    gp::GPModel updated(std::move(data), prepared.params());
    const auto best = gp::minimize_gp_on_line(updated, center, axis);

    if (hook) hook(StepContext{&prepared, &updated, center, axis, kappa2, alloc});

    state.x_hat = best.x;
    state.y_hat = best.value;
    state.history.push_back(best.value);
    state.kappa2 = update_threshold(state.history, config.schedule, state.eta2, kappa2);
    state.axis = (axis + 1) % state.orders.size();
    state.t += 1;
    state.cum_shots += alloc.total();
    state.gp.emplace(std::move(updated));
    return state;
}

OptimizerState nft_step(OptimizerState state, const OptimizerConfig &config,
                        ObservationChannel &channel) {
    const std::size_t axis = state.axis;
    const int order = state.orders[axis];
    const auto shifts = gp::equidistant_shifts(1 + 2 * order);
    const auto points = gp::line_points(state.x_hat, axis, shifts);
    const long recal = config.nft_recal_interval == -1
                           ? static_cast<long>(state.orders.size())
                           : config.nft_recal_interval;

    std::int64_t spent = 0;
    std::vector<double> values(points.size(), state.y_hat);
    for (std::size_t w = 0; w < points.size(); ++w) {
        if (w == 0 && !(recal > 0 && (state.t + 1) % recal == 0)) continue;
        values[w] = channel.observe(as_vector(points[w]), config.nft_shots).value;
        spent += config.nft_shots;
    }
    const auto poly = gp::fit_trig_1d(shifts, values, std::nullopt, order);
    const auto m = gp::minimize_trig_1d(poly);

    state.x_hat[static_cast<Eigen::Index>(axis)] =
        gp::wrap_angle(state.x_hat[static_cast<Eigen::Index>(axis)] + m.theta);
    state.y_hat = m.value;
    state.history.push_back(m.value);
    state.kappa2 = state.eta2 / config.nft_shots;
    state.axis = (axis + 1) % state.orders.size();
    state.t += 1;
    state.cum_shots += spent;
    return state;
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

gp::Point initial_point(std::size_t dim, std::uint64_t seed) {
    sim::Rng rng(stream_seed(seed, 0));
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
    gp::Point x(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = u(rng);
    return gp::wrap_point(x);
}

OptimizerTrace run(const OptimizerConfig &config, const sim::VqeProblem &problem,
                   ObservationChannel &channel, const gp::Point &x0, const StepHook &hook) {
    config.validate();
    OptimizerState state =
        initialize(config, problem.circuit(), problem.hamiltonian(), channel, x0);

    OptimizerTrace trace;
    trace.x0 = as_vector(state.x_hat);
    trace.eta2 = state.eta2;
    do {
        const std::size_t axis = state.axis;
        const double kappa2 = state.kappa2;
        const std::int64_t before = state.cum_shots;
        state = uses_gp(config.variant) ? subscore_step(std::move(state), config, channel, hook)
                                        : nft_step(std::move(state), config, channel);
        const auto x = as_vector(state.x_hat);
        trace.rows.push_back({state.t, axis, state.cum_shots - before, state.cum_shots,
                              std::sqrt(uses_gp(config.variant) ? kappa2 : state.kappa2),
                              state.y_hat, problem.delta_energy(x), problem.delta_fidelity(x)});
    } while (state.cum_shots < config.budget &&
             (config.max_steps == 0 || state.t < config.max_steps));
    trace.x_final = as_vector(state.x_hat);
    return trace;
}

} // namespace subscore::optim
