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
#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "subscore/error.hpp"
#include "subscore/gp/core.hpp"
#include "subscore/gp/theory.hpp"
#include "subscore/optim/optimizer.hpp"

using namespace subscore;
using namespace subscore::optim;
constexpr double kPi = std::numbers::pi;

namespace {

std::vector<double> as_vec(const gp::Point &p) { return {p.data(), p.data() + p.size()}; }

sim::VqeProblem small_problem(int q = 3, int layers = 1) {
    return {sim::build_efficient_su2(q, layers), sim::build_critical_ising(q)};
}

gp::GPModel random_model(std::size_t dim, int n, double noise, std::uint64_t seed,
                         double sigma0_2 = 2.0, double gamma2 = 4.0) {
    sim::Rng rng(seed);
    std::uniform_real_distribution<double> u(0.0, 2 * kPi);
    gp::Dataset d;
    for (int i = 0; i < n; ++i) {
        gp::Point x(static_cast<Eigen::Index>(dim));
        for (auto &v : x) v = u(rng);
        d.append(x, 0.0, noise);
    }
    return {d, {gamma2, sigma0_2, std::vector<int>(dim, 1)}};
}

} // namespace

TEST_CASE("ols slope and threshold update") {
    const std::vector<double> line{5.0, 4.9, 4.8, 4.7};
    CHECK(ols_slope(line) == doctest::Approx(-0.1));
    ScheduleParams s;
    s.T_ave = 4;
    const double eta2 = 1e-4;
    CHECK(update_threshold(std::vector<double>{1, 1, 1, 1}, s, eta2, 0.5) ==
          doctest::Approx(eta2 / 1024));
    CHECK(update_threshold(line, s, eta2, 0.5) == doctest::Approx(0.01));
    CHECK(update_threshold(std::vector<double>{1, 2, 3, 4}, s, eta2, 0.5) ==
          doctest::Approx(eta2 / 1024));
    CHECK(update_threshold(std::vector<double>{1, 2, 3}, s, eta2, 0.5) == 0.5);
    // Only the last T_ave values count.
    CHECK(update_threshold(std::vector<double>{-100, 5.0, 4.9, 4.8, 4.7}, s, eta2, 0.5) ==
          doctest::Approx(0.01));
}

TEST_CASE("schedule validation") {
    ScheduleParams s;
    CHECK_NOTHROW(s.validate());
    s.C0_shots = 10;
    CHECK_THROWS_AS(s.validate(), Error);
    s = {};
    s.C1 = 0.0;
    CHECK_THROWS_AS(s.validate(), Error);
}

TEST_CASE("refit schedule") {
    const RefitSchedule r("100*1+20*9+10*100");
    for (long t = 1; t <= 100; ++t) CHECK(r.due(t));
    CHECK_FALSE(r.due(101));
    CHECK(r.due(109));
    CHECK(r.due(280));
    CHECK_FALSE(r.due(281));
    CHECK(r.due(380));
    CHECK(r.due(1280));
    CHECK(r.due(1380));
    CHECK_FALSE(r.due(1381));
    CHECK_FALSE(r.due(0));
    for (const char *bad : {"", "10", "a*1", "0*5", "5*0", "3*2+", "3*2x"})
        CHECK_THROWS_AS(RefitSchedule{bad}, Error);
}

TEST_CASE("bound allocation") {
    const gp::Point c = gp::Point::Constant(4, 1.0);
    auto a = choose_shots_bound(c, 2, 1, 1.0 / 512, 1.0);
    REQUIRE(a.shots.size() == 3);
    for (auto n : a.shots) CHECK(n == 512);
    CHECK(a.total() == 1536);
    for (int w = 0; w < 3; ++w) {
        CHECK(a.points[w][2] == doctest::Approx(gp::wrap_angle(1.0 + 2 * kPi * w / 3)));
        CHECK(a.points[w][0] == 1.0);
        CHECK(a.variances[w] == doctest::Approx(1.0 / 512));
    }
    a = choose_shots_bound(c, 0, 1, 2.0, 1.0);
    for (auto n : a.shots) CHECK(n == 1);
    CHECK(choose_shots_bound(c, 0, 2, 0.1, 1.0).shots.size() == 5);
    // eta2 / (eta2 / N) must not round up to N + 1.
    for (int n : {3, 512, 1000, 1024})
        for (double eta2 : {0.3, 7.1, 11.311})
            CHECK(choose_shots_bound(c, 0, 1, eta2 / n, eta2).shots[0] == n);
}

TEST_CASE("line variance probe matches refitting the GP") {
    const auto model = random_model(3, 15, 0.05, 1);
    gp::Point c(3);
    c << 0.3, 2.0, 5.0;
    const LineVarianceProbe probe(model, c, 1);
    sim::Rng rng(2);
    std::uniform_real_distribution<double> s(0.001, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> noise{s(rng), s(rng), s(rng)};
        if (trial % 3 == 0) noise[0] = std::numeric_limits<double>::infinity();
        gp::Dataset d = model.data();
        for (int w = 0; w < 3; ++w)
            if (std::isfinite(noise[w])) d.append(probe.points()[w], 0.0, noise[w]);
        const gp::GPModel refit(d, model.params());
        CHECK(probe.max_variance(noise) == doctest::Approx(gp::max_line_variance(refit, c, 1)).epsilon(1e-9));
    }
}

TEST_CASE("center allocation on an empty GP tracks the uniform-variance formula") {
    const double eta2 = 2.0, sigma0_2 = 1.5;
    const gp::GPModel empty(gp::Dataset{}, {4.0, sigma0_2, {1, 1}});
    const gp::Point c = gp::Point::Constant(2, 0.7);
    for (double kappa2 : {0.01, 0.003, 0.05}) {
        const auto a = choose_shots_center(empty, c, 0, kappa2, eta2);
        const auto tied = a.shots[1];
        CHECK(a.shots[2] == tied);
        CHECK(gp::uniform_posterior_variance(eta2 / tied, 4.0, sigma0_2, 1) <= kappa2);
        CHECK(gp::uniform_posterior_variance(eta2 / (tied - 1), 4.0, sigma0_2, 1) > kappa2);
        // No prior information at the center: it cannot be relaxed much.
        CHECK(a.shots[0] >= tied - 1);
        CHECK(a.shots[0] <= tied);
    }
}

TEST_CASE("center allocation exploits a tight prior at the center") {
    const gp::Point c = gp::Point::Constant(3, 1.2);
    gp::Dataset d;
    for (int i = 0; i < 5; ++i) d.append(c, 0.0, 1e-5);
    const gp::GPModel model(d, {4.0, 1.0, {1, 1, 1}});
    const double kappa2 = 0.01, eta2 = 1.0;
    REQUIRE(model.variance(c) <= 0.01 * kappa2);
    const auto center = choose_shots_center(model, c, 1, kappa2, eta2);
    const auto bound = choose_shots_bound(c, 1, 1, kappa2, eta2);
    CHECK(center.shots[0] == 0);
    CHECK(std::isinf(center.variances[0]));
    CHECK(center.total() < bound.total());
}

TEST_CASE("center allocation when the threshold exceeds the prior variance") {
    const gp::GPModel empty(gp::Dataset{}, {4.0, 1.0, {1}});
    const auto a = choose_shots_center(empty, gp::Point::Zero(1), 0, 1.0, 5.0);
    for (auto n : a.shots) CHECK(n <= 1);
    CHECK(a.total() >= 1);
}

TEST_CASE("center never costs more than bound and always satisfies the line check") {
    sim::Rng rng(7);
    std::uniform_real_distribution<double> u(0.0, 2 * kPi), k(0.002, 0.2);
    for (int trial = 0; trial < 25; ++trial) {
        const auto model = random_model(3, 2 + trial, 0.02 + 0.01 * (trial % 4), 100 + trial);
        gp::Point c(3);
        for (auto &v : c) v = u(rng);
        const std::size_t axis = static_cast<std::size_t>(trial % 3);
        const double kappa2 = k(rng), eta2 = 1.3;
        const auto a = choose_shots_center(model, c, axis, kappa2, eta2);
        const auto b = choose_shots_bound(c, axis, 1, kappa2, eta2);
        CHECK(a.total() <= b.total());
        CHECK(a.total() >= 1);
        gp::Dataset d = model.data();
        for (std::size_t w = 0; w < a.points.size(); ++w)
            if (a.shots[w] > 0) d.append(a.points[w], 0.0, a.variances[w]);
        CHECK(gp::subspace_in_core(gp::GPModel(d, model.params()), c, axis, kappa2 * (1 + 1e-6)));
    }
}

TEST_CASE("optimizer config validation") {
    OptimizerConfig c;
    CHECK_NOTHROW(c.validate());
    c.budget = 0;
    CHECK_THROWS_AS(c.validate(), Error);
    c = {};
    c.gamma_refit = "x";
    CHECK_THROWS_AS(c.validate(), Error);
    c = {};
    c.compression.keep = 200;
    CHECK_THROWS_AS(c.validate(), Error);
    CHECK(parse_variant("center") == Variant::SubscoreCenter);
    CHECK_THROWS_AS(parse_variant("emicore"), Error);
}

TEST_CASE("nft step reaches the exact line minimum without noise") {
    const auto problem = small_problem();
    NoiselessChannel channel(problem);
    OptimizerConfig cfg;
    cfg.variant = Variant::Nft;
    cfg.nft_recal_interval = 0;
    auto state = initialize(cfg, problem.circuit(), problem.hamiltonian(), channel,
                            initial_point(12, 3));
    CHECK(state.cum_shots == 1024);
    for (int step = 0; step < 12; ++step) {
        const gp::Point before = state.x_hat;
        const std::size_t axis = state.axis;
        const auto cum = state.cum_shots;
        state = nft_step(std::move(state), cfg, channel);
        CHECK(state.cum_shots - cum == 2 * 1024);
        double grid_min = 1e9;
        for (const auto &p : gp::line_points(before, axis, gp::equidistant_shifts(1024)))
            grid_min = std::min(grid_min, problem.energy(as_vec(p)));
        const double reached = problem.energy(as_vec(state.x_hat));
        CHECK(reached <= grid_min + 1e-9);
        CHECK(state.y_hat == doctest::Approx(reached).epsilon(1e-9));
        for (Eigen::Index i = 0; i < before.size(); ++i)
            if (static_cast<std::size_t>(i) != axis) CHECK(state.x_hat[i] == before[i]);
    }
}

TEST_CASE("nft recalibrates the center every D steps by default") {
    const auto problem = small_problem();
    NoiselessChannel channel(problem);
    OptimizerConfig cfg;
    cfg.variant = Variant::Nft;
    auto state = initialize(cfg, problem.circuit(), problem.hamiltonian(), channel,
                            initial_point(12, 4));
    for (int step = 1; step <= 24; ++step) {
        const auto cum = state.cum_shots;
        state = nft_step(std::move(state), cfg, channel);
        CHECK(state.cum_shots - cum == (step % 12 == 0 ? 3 : 2) * 1024);
    }
}

TEST_CASE("nft carried value drifts without recalibration") {
    const sim::VqeProblem problem(sim::build_efficient_su2(5, 3), sim::build_critical_ising(5));
    const gp::Point x0 = initial_point(40, 11);
    const double eta2 = problem.single_shot_variance(as_vec(x0));
    SimulatorChannel channel(problem, {sim::NoiseKind::GaussianExact, eta2}, 5);
    OptimizerConfig cfg;
    cfg.variant = Variant::Nft;
    cfg.nft_recal_interval = 0;
    auto state = initialize(cfg, problem.circuit(), problem.hamiltonian(), channel, x0);
    double worst = 0.0;
    for (int step = 0; step < 200; ++step) {
        state = nft_step(std::move(state), cfg, channel);
        worst = std::max(worst, std::abs(state.y_hat - problem.energy(as_vec(state.x_hat))));
    }
    CHECK(worst > 3.0 * std::sqrt(eta2 / 1024));
}

TEST_CASE("subscore steps: accounting, sweep, threshold floor and the line guarantee") {
    const auto problem = small_problem();
    const gp::Point x0 = initial_point(12, 5);
    const double eta2 = problem.single_shot_variance(as_vec(x0));
    for (Variant v : {Variant::SubscoreCenter, Variant::SubscoreBound}) {
        SimulatorChannel channel(problem, {sim::NoiseKind::GaussianExact, eta2}, 9);
        OptimizerConfig cfg;
        cfg.variant = v;
        cfg.schedule.T_ave = 5;
        auto state = initialize(cfg, problem.circuit(), problem.hamiltonian(), channel, x0);
        CHECK(state.cum_shots == 512);
        CHECK(state.kappa2 == doctest::Approx(eta2 / 512));
        std::vector<int> hits(12, 0);
        for (int step = 0; step < 36; ++step) {
            const auto cum = state.cum_shots;
            std::int64_t allocated = -1;
            bool in_core = false;
            const double floor = eta2 / cfg.schedule.C0_shots;
            state = subscore_step(std::move(state), cfg, channel, [&](const StepContext &ctx) {
                allocated = ctx.allocation.total();
                in_core = gp::subspace_in_core(*ctx.updated, ctx.center, ctx.axis,
                                               ctx.kappa2 * (1 + 1e-6));
                // Shifts are wrapped 2 pi w / 3 offsets of the center.
                for (std::size_t w = 0; w < 3; ++w)
                    CHECK(ctx.allocation.points[w][static_cast<Eigen::Index>(ctx.axis)] ==
                          doctest::Approx(gp::wrap_angle(
                              ctx.center[static_cast<Eigen::Index>(ctx.axis)] + 2 * kPi * w / 3)));
                ++hits[ctx.axis];
            });
            CHECK(in_core);
            CHECK(state.cum_shots - cum == allocated);
            CHECK(state.cum_shots > cum);
            CHECK(state.kappa2 >= floor * (1 - 1e-12));
            for (auto x : state.x_hat) CHECK((x >= 0.0 && x < 2 * kPi));
            if ((step + 1) % 12 == 0) {
                for (int &h : hits) {
                    CHECK(h == 1);
                    h = 0;
                }
            }
        }
    }
}

TEST_CASE("noise-free subscore descends monotonically") {
    const auto problem = small_problem();
    NoiselessChannel channel(problem);
    OptimizerConfig cfg;
    auto state = initialize(cfg, problem.circuit(), problem.hamiltonian(), channel,
                            initial_point(12, 6));
    double prev_true = problem.energy(as_vec(state.x_hat));
    double prev_hat = state.y_hat;
    for (int step = 0; step < 36; ++step) {
        state = subscore_step(std::move(state), cfg, channel);
        const double now = problem.energy(as_vec(state.x_hat));
        CHECK(now <= prev_true + 1e-8);
        CHECK(state.y_hat <= prev_hat + 1e-8);
        prev_true = now;
        prev_hat = state.y_hat;
    }
}

TEST_CASE("run: budget, determinism, shared start") {
    const auto problem = small_problem();
    const gp::Point x0 = initial_point(12, 8);
    CHECK(initial_point(12, 8) == x0);
    CHECK_FALSE(initial_point(12, 9) == x0);
    const double eta2 = problem.single_shot_variance(as_vec(x0));
    auto once = [&](Variant v, std::int64_t budget) {
        SimulatorChannel channel(problem, {sim::NoiseKind::GaussianExact, eta2}, 77);
        OptimizerConfig cfg;
        cfg.variant = v;
        cfg.budget = budget;
        return run(cfg, problem, channel, x0);
    };
    for (Variant v : {Variant::Nft, Variant::SubscoreBound, Variant::SubscoreCenter}) {
        CHECK(once(v, 10).rows.size() == 1);
        const auto a = once(v, 40000), b = once(v, 40000);
        CHECK(a == b);
        CHECK(a.x0 == as_vec(x0));
        CHECK(a.rows.back().cum_shots >= 40000);
        CHECK(a.rows[a.rows.size() - 2].cum_shots < 40000);
        for (const auto &r : a.rows) {
            CHECK(r.delta_energy >= -1e-9);
            CHECK(r.delta_fidelity >= -1e-12);
            CHECK(r.delta_fidelity <= 1.0);
        }
    }
    OptimizerConfig bad;
    bad.schedule.T_ave = 0;
    SimulatorChannel channel(problem, {sim::NoiseKind::GaussianExact, eta2}, 1);
    CHECK_THROWS_AS(run(bad, problem, channel, x0), Error);
}
