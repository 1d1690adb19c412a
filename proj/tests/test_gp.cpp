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

#include "oracles.hpp"
#include "subscore/error.hpp"
#include "subscore/gp/compress.hpp"
#include "subscore/gp/core.hpp"
#include "subscore/gp/kernel.hpp"
#include "subscore/gp/loo.hpp"
#include "subscore/gp/model.hpp"
#include "subscore/gp/theory.hpp"
#include "subscore/gp/trig.hpp"

using namespace subscore;
using namespace subscore::gp;
constexpr double kPi = std::numbers::pi;

namespace {

using Rng = std::mt19937_64;

Point random_point(std::size_t d, Rng &rng) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
    Point p(static_cast<Eigen::Index>(d));
    for (Eigen::Index i = 0; i < p.size(); ++i) p[i] = u(rng);
    return p;
}

std::vector<double> to_vec(const Point &p) { return {p.data(), p.data() + p.size()}; }

KernelParams params_for(std::size_t d, double gamma2, double sigma0_2, int v = 1) {
    return {gamma2, sigma0_2, std::vector<int>(d, v)};
}

/// Model trained only on the 1+2V equidistant points of one line.
GPModel line_model(const Point &center, std::size_t axis, const KernelParams &p, double sigma2,
                   const std::vector<double> &values = {}) {
    const int v = p.vd[axis];
    const auto pts = line_points(center, axis, equidistant_shifts(1 + 2 * v));
    Dataset data;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        data.append(pts[i], values.empty() ? 0.0 : values[i], sigma2);
    }
    return GPModel(data, p);
}

} // namespace

TEST_CASE("vqe kernel examples") {
    const auto p = params_for(3, 1.0, 2.5);
    Rng rng(1);
    const Point a = random_point(3, rng);
    CHECK(vqe_kernel(a, a, p) == doctest::Approx(2.5).epsilon(1e-15));
    Point b = a;
    b[1] += kPi;
    CHECK(vqe_kernel(a, b, p) == doctest::Approx(-2.5 / 3.0).epsilon(1e-14));
    b[2] += kPi;
    CHECK(vqe_kernel(a, b, p) == doctest::Approx(2.5 / 9.0).epsilon(1e-14));
    const Point c = random_point(3, rng);
    CHECK(vqe_kernel(a, c, p) == doctest::Approx(vqe_kernel(c, a, p)).epsilon(1e-15));
    CHECK(vqe_kernel(a, c, p) ==
          doctest::Approx(oracle::vqe_kernel(to_vec(a), to_vec(c), 1.0, 2.5, p.vd)).epsilon(1e-14));
}

TEST_CASE("random Gram matrices are PSD") {
    Rng rng(2);
    std::uniform_int_distribution<int> nd(1, 6), nn(2, 30), nv(1, 3);
    std::uniform_real_distribution<double> g(0.1, 30.0);
    for (int trial = 0; trial < 40; ++trial) {
        const auto d = static_cast<std::size_t>(nd(rng));
        KernelParams p{g(rng), 1.7, {}};
        for (std::size_t i = 0; i < d; ++i) p.vd.push_back(nv(rng));
        std::vector<Point> pts;
        const int n = nn(rng);
        for (int i = 0; i < n; ++i) pts.push_back(random_point(d, rng));
        const Eigen::MatrixXd k = kernel_matrix(pts, pts, p);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k);
        CHECK(es.eigenvalues().minCoeff() >= -1e-9 * p.sigma0_2);
    }
}

TEST_CASE("dataset invariants") {
    Dataset d;
    Point p(2);
    p << -0.5, 7.0;
    d.append(p, 1.0, 0.1);
    CHECK(d.points()[0][0] == doctest::Approx(2 * kPi - 0.5));
    CHECK(d.points()[0][1] == doctest::Approx(7.0 - 2 * kPi));
    CHECK_THROWS_AS(d.append(p, 1.0, 0.0), Error);
    CHECK_THROWS_AS(d.append(Point::Zero(3), 1.0, 0.1), Error);
}

TEST_CASE("posterior limits") {
    const auto p = params_for(2, 3.0, 1.5);
    Rng rng(3);
    const Point x = random_point(2, rng);
    const GPModel empty(Dataset{}, p);
    const auto prior = empty.posterior({x});
    CHECK(prior.mean[0] == 0.0);
    CHECK(prior.cov(0, 0) == doctest::Approx(1.5));

    Dataset one;
    one.append(x, 0.8, 1e-12);
    const GPModel tight(one, p);
    CHECK(tight.mean(x) == doctest::Approx(0.8).epsilon(1e-9));
    CHECK(tight.variance(x) < 1e-10);
}

TEST_CASE("posterior agrees with explicit-feature Bayesian linear regression") {
    Rng rng(4);
    std::uniform_int_distribution<int> nd(1, 2), nv(1, 2), nn(0, 15);
    std::uniform_real_distribution<double> g(0.3, 10.0), s(1e-3, 1.0), yv(-2.0, 2.0);
    for (int trial = 0; trial < 30; ++trial) {
        const auto d = static_cast<std::size_t>(nd(rng));
        KernelParams p{g(rng), 0.5 + s(rng), {}};
        for (std::size_t i = 0; i < d; ++i) p.vd.push_back(nv(rng));
        Dataset data;
        std::vector<std::vector<double>> xs, ts;
        std::vector<double> ys, ns;
        const int n = nn(rng);
        for (int i = 0; i < n; ++i) {
            const Point x = random_point(d, rng);
            const double y = yv(rng), nv2 = s(rng);
            data.append(x, y, nv2);
            xs.push_back(to_vec(x));
            ys.push_back(y);
            ns.push_back(nv2);
        }
        std::vector<Point> test;
        for (int i = 0; i < 6; ++i) {
            test.push_back(random_point(d, rng));
            ts.push_back(to_vec(test.back()));
        }
        const auto post = GPModel(data, p).posterior(test);
        const auto ref = oracle::blr_posterior(xs, ys, ns, ts, p.gamma2, p.sigma0_2, p.vd);
        CHECK((post.mean - ref.mean).cwiseAbs().maxCoeff() < 1e-8);
        CHECK((post.cov - ref.cov).cwiseAbs().maxCoeff() < 1e-8);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(post.cov);
        CHECK(es.eigenvalues().minCoeff() >= -1e-10);
    }
}

TEST_CASE("uniform posterior variance closed form") {
    CHECK(uniform_posterior_variance(1.0, 1.0, 1.0, 1) == doctest::Approx(0.5).epsilon(1e-15));
    // Same configuration by direct 3x3 inversion.
    const auto p = params_for(1, 1.0, 1.0);
    const Point c = Point::Constant(1, 0.4);
    const auto pts = line_points(c, 0, equidistant_shifts(3));
    std::vector<std::vector<double>> xs;
    for (const auto &q : pts) xs.push_back(to_vec(q));
    const auto ref = oracle::gp_by_inverse(xs, {0, 0, 0}, {1, 1, 1}, {{1.234}}, 1.0, 1.0, {1});
    CHECK(ref.cov(0, 0) == doctest::Approx(0.5).epsilon(1e-12));

    CHECK(uniform_posterior_variance(1e12, 2.0, 3.0, 2) == doctest::Approx(3.0).epsilon(1e-6));
    CHECK(uniform_posterior_variance(std::numeric_limits<double>::infinity(), 2.0, 3.0, 2) == 3.0);
    for (double g2 : {0.5, 1.0, 4.0, 100.0})
        for (int v : {1, 2, 3})
            for (double s2 : {1e-4, 0.3, 2.0, 50.0})
                CHECK(uniform_posterior_variance(s2, g2, 1.3, v) < s2);
}

TEST_CASE("equidistant observations give uniform variance matching the closed form") {
    Rng rng(5);
    for (double g2 : {1.0, 4.0, 25.0}) {
        for (int v : {1, 2, 3}) {
            for (double ratio : {0.01, 1.0, 100.0}) {
                const double sigma0_2 = 2.0;
                KernelParams p{g2, sigma0_2, {1, v, 2}};
                const Point c = random_point(3, rng);
                const auto model = line_model(c, 1, p, ratio * sigma0_2);
                const auto probes = line_points(c, 1, std::vector<double>{0.3, 1.9, 2.2, 4.4, 6.0});
                const Eigen::VectorXd var = model.variances(probes);
                const double expected = uniform_posterior_variance(ratio * sigma0_2, p, v);
                CHECK(var.maxCoeff() - var.minCoeff() < 1e-8 * sigma0_2);
                CHECK(std::abs(var[0] - expected) < 1e-8 * expected);
            }
        }
    }
}

TEST_CASE("core_contains") {
    const auto p = params_for(2, 2.0, 1.0);
    const GPModel empty(Dataset{}, p);
    const Point x = Point::Constant(2, 1.0);
    CHECK_FALSE(core_contains(empty, 0.9, x));
    CHECK(core_contains(empty, 1.0, x));

    const double s2 = 0.05;
    const auto model = line_model(x, 0, p, s2);
    const double u = uniform_posterior_variance(s2, p, 1);
    Rng rng(6);
    std::uniform_real_distribution<double> a(0.0, 2 * kPi);
    for (int i = 0; i < 10; ++i) {
        Point q = x;
        q[0] += a(rng);
        CHECK(core_contains(model, u * (1 + 1e-9), q));
        CHECK_FALSE(core_contains(model, u * (1 - 1e-6), q));
    }
}

TEST_CASE("subspace_in_core") {
    const auto p = params_for(3, 4.0, 1.0);
    const Point c = Point::Constant(3, 2.0);
    CHECK_FALSE(subspace_in_core(GPModel(Dataset{}, p), c, 1, 0.5));
    const double s2 = 0.02;
    const auto model = line_model(c, 1, p, s2);
    const double u = uniform_posterior_variance(s2, p, 1);
    for (int grid : {6, 17, 64}) {
        CHECK(subspace_in_core(model, c, 1, u * (1 + 1e-9), grid));
        CHECK_FALSE(subspace_in_core(model, c, 1, u * (1 - 1e-6), grid));
    }
    CHECK_THROWS_AS(subspace_in_core(model, c, 1, u, 5), Error);
}

TEST_CASE("posterior variance never increases when a noise entry decreases") {
    Rng rng(7);
    const auto p = params_for(3, 3.0, 1.0);
    Dataset base;
    std::vector<Point> pts;
    std::uniform_real_distribution<double> s(0.01, 1.0);
    for (int i = 0; i < 12; ++i) {
        pts.push_back(random_point(3, rng));
        base.append(pts.back(), 0.0, s(rng));
    }
    std::vector<Point> probes;
    for (int i = 0; i < 50; ++i) probes.push_back(random_point(3, rng));
    const Eigen::VectorXd before = GPModel(base, p).variances(probes);
    for (std::size_t k = 0; k < pts.size(); ++k) {
        Dataset tighter;
        for (std::size_t i = 0; i < pts.size(); ++i)
            tighter.append(pts[i], 0.0, base.noise()[i] * (i == k ? 0.3 : 1.0));
        const Eigen::VectorXd after = GPModel(tighter, p).variances(probes);
        CHECK((after - before).maxCoeff() <= 1e-12);
    }
}

TEST_CASE("fit_trig_1d") {
    const std::vector<double> eq{0.0, 2 * kPi / 3, 4 * kPi / 3};
    std::vector<double> cosv, constv;
    for (double t : eq) {
        cosv.push_back(std::cos(t));
        constv.push_back(3.25);
    }
    const auto a = fit_trig_1d(eq, cosv, std::nullopt, 1);
    CHECK(std::abs(a.constant) < 1e-14);
    CHECK(a.cos_coef[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(a.sin_coef[0]) < 1e-14);
    const auto b = fit_trig_1d(eq, constv, std::nullopt, 1);
    CHECK(b.constant == doctest::Approx(3.25));
    CHECK(std::abs(b.cos_coef[0]) < 1e-14);

    Rng rng(8);
    std::uniform_real_distribution<double> u(0.0, 2 * kPi), c(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double c0 = c(rng), c1 = c(rng), s1 = c(rng);
        std::vector<double> t{u(rng), u(rng), u(rng)}, y;
        for (double th : t) y.push_back(c0 + c1 * std::cos(th) + s1 * std::sin(th));
        const auto f = fit_trig_1d(t, y, std::nullopt, 1);
        CHECK(std::abs(f.constant - c0) < 1e-9);
        CHECK(std::abs(f.cos_coef[0] - c1) < 1e-9);
        CHECK(std::abs(f.sin_coef[0] - s1) < 1e-9);
    }
    // Over-determined weighted fit of an exact order-2 polynomial.
    std::vector<double> t, y, w;
    for (int i = 0; i < 9; ++i) {
        t.push_back(u(rng));
        y.push_back(1.0 - 0.5 * std::cos(2 * t.back()) + 0.2 * std::sin(t.back()));
        w.push_back(0.5 + i);
    }
    const auto f2 = fit_trig_1d(t, y, std::span<const double>(w), 2);
    CHECK(f2.constant == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(f2.cos_coef[1] == doctest::Approx(-0.5).epsilon(1e-10));

    const std::vector<double> dup{0.5, 0.5, 1.0}, dv{1.0, 1.0, 2.0};
    CHECK_THROWS_AS(fit_trig_1d(dup, dv, std::nullopt, 1), Error);
    CHECK_THROWS_AS(fit_trig_1d(std::vector<double>{0.1, 0.2}, std::vector<double>{1, 2},
                                std::nullopt, 1),
                    Error);
}

TEST_CASE("minimize_trig_1d") {
    TrigPoly1D cosp{1, 0.0, {1.0}, {0.0}};
    auto m = minimize_trig_1d(cosp);
    CHECK(m.theta == doctest::Approx(kPi));
    CHECK(m.value == doctest::Approx(-1.0));

    TrigPoly1D sinp{1, 0.0, {0.0}, {1.0}};
    m = minimize_trig_1d(sinp);
    CHECK(m.theta == doctest::Approx(1.5 * kPi));
    CHECK(m.value == doctest::Approx(-1.0));

    TrigPoly1D both{1, 2.0, {1.0}, {1.0}};
    m = minimize_trig_1d(both);
    CHECK(m.theta == doctest::Approx(1.25 * kPi));
    CHECK(m.value == doctest::Approx(2.0 - std::sqrt(2.0)));
    double grid_min = 1e9;
    for (int i = 0; i < 100000; ++i) grid_min = std::min(grid_min, both(2 * kPi * i / 100000));
    CHECK(std::abs(grid_min - m.value) < 1e-8);

    TrigPoly1D flat{1, 0.7, {1e-16}, {0.0}};
    m = minimize_trig_1d(flat);
    CHECK(m.theta == 0.0);
    CHECK(m.value == doctest::Approx(0.7));

    // Higher orders against a dense scan with golden-section polish.
    Rng rng(9);
    std::uniform_real_distribution<double> c(-1.0, 1.0);
    for (int order : {2, 3, 4}) {
        for (int trial = 0; trial < 10; ++trial) {
            TrigPoly1D p{order, c(rng), {}, {}};
            for (int v = 0; v < order; ++v) {
                p.cos_coef.push_back(c(rng));
                p.sin_coef.push_back(c(rng));
            }
            double best = 1e9, bt = 0;
            const int n = 200000;
            for (int i = 0; i < n; ++i) {
                const double t = 2 * kPi * i / n;
                if (p(t) < best) best = p(t), bt = t;
            }
            double lo = bt - 2 * kPi / n, hi = bt + 2 * kPi / n;
            for (int it = 0; it < 200; ++it) {
                const double m1 = lo + (hi - lo) * 0.381966, m2 = hi - (hi - lo) * 0.381966;
                (p(m1) < p(m2) ? hi : lo) = (p(m1) < p(m2) ? m2 : m1);
            }
            best = std::min(best, p(0.5 * (lo + hi)));
            CHECK(minimize_trig_1d(p).value - best < 1e-10);
        }
    }
}

TEST_CASE("minimize_gp_on_line") {
    const auto p = params_for(2, 2.0, 1.0);
    Point c(2);
    c << 0.0, 1.1;
    std::vector<double> vals;
    for (double a : equidistant_shifts(3)) vals.push_back(std::cos(a));
    // Noiseless limit: the fitted mean interpolates cos along axis 0.
    const auto model = line_model(c, 0, p, 1e-12, vals);
    const auto m = minimize_gp_on_line(model, c, 0);
    CHECK(m.shift == doctest::Approx(kPi).epsilon(1e-8));
    CHECK(m.value == doctest::Approx(-1.0).epsilon(1e-8));
    CHECK(std::abs(model.mean(m.x) - m.value) < 1e-9);

    // Constant along the line: training data on a different axis only.
    const auto other = line_model(c, 1, p, 0.1, {0.3, -0.2, 0.5});
    const auto flat = minimize_gp_on_line(GPModel(Dataset{}, p), c, 0);
    CHECK(flat.x.isApprox(c));
    Rng rng(10);
    const Point rc = random_point(2, rng);
    const auto r = minimize_gp_on_line(other, rc, 0);
    CHECK(std::abs(other.mean(r.x) - r.value) < 1e-9);
}

TEST_CASE("regularized DFT equivalence at gamma = 1") {
    Rng rng(11);
    std::uniform_real_distribution<double> yv(-1.0, 1.0);
    for (int v : {1, 2, 3}) {
        for (double ratio : {0.01, 0.5, 3.0}) {
            KernelParams p{1.0, 1.7, {v, 1}};
            const Point c = random_point(2, rng);
            std::vector<double> y;
            for (int w = 0; w < 1 + 2 * v; ++w) y.push_back(yv(rng));
            const auto model = line_model(c, 0, p, ratio * p.sigma0_2, y);
            const auto shifts = equidistant_shifts(1 + 2 * v);
            const Eigen::VectorXd mu = model.means(line_points(c, 0, shifts));
            const auto poly = fit_trig_1d(shifts, std::span<const double>(mu.data(), shifts.size()),
                                          std::nullopt, v);
            const auto dft = oracle::dft_coefficients(y, v);
            const double scale = 1.0 / (1.0 + ratio);
            CHECK(std::abs(poly.constant - scale * dft[0]) < 1e-10);
            for (int j = 0; j < v; ++j) {
                CHECK(std::abs(poly.cos_coef[j] - scale * dft[1 + j]) < 1e-10);
                CHECK(std::abs(poly.sin_coef[j] - scale * dft[1 + v + j]) < 1e-10);
            }
        }
    }
}

TEST_CASE("loo gamma search") {
    const auto grid = gamma_grid({});
    REQUIRE(grid.size() == 90);
    CHECK(grid.front() == std::sqrt(2.0));
    CHECK(grid.back() == 20.0);

    const auto p = params_for(3, 4.0, 1.0);
    Dataset two;
    two.append(Point::Zero(3), 1.0, 0.1);
    two.append(Point::Ones(3), 0.5, 0.1);
    CHECK(loo_gamma_search(two, p) == 4.0);

    // Additive (interaction-free) target: smoother kernels should win.
    Rng rng(12);
    Dataset additive;
    for (int i = 0; i < 40; ++i) {
        const Point x = random_point(3, rng);
        const double f = 0.3 + 0.8 * std::cos(x[0]) - 0.5 * std::sin(x[1]) + 0.4 * std::cos(x[2] + 0.3);
        additive.append(x, f, 1e-6);
    }
    CHECK(loo_gamma_search(additive, p) > 2.0);
}

TEST_CASE("compression") {
    Rng rng(13);
    const auto p = params_for(2, 9.0, 1.0);
    auto f = [](const Point &x) { return 0.5 * std::cos(x[0]) - 0.3 * std::sin(x[1]) + 0.1; };
    Dataset data;
    std::normal_distribution<double> noise(0.0, 0.05);
    // Points concentrated near a slowly drifting center, as in an optimizer run.
    Point center = random_point(2, rng);
    for (int i = 0; i < 121; ++i) {
        center[i % 2] += 0.05;
        Point x = center;
        x[i % 2] += 2 * kPi * (i % 3) / 3.0;
        data.append(x, f(x) + noise(rng), 0.0025);
    }
    Dataset at120 = data.slice(0, 120);
    CHECK(compress(at120, p) == at120);
    const Dataset small = compress(data, p);
    CHECK(small.size() <= 101);
    // Retained tail untouched.
    CHECK(small.values().back() == data.values().back());

    std::vector<Point> probes(data.points().end() - 99, data.points().end());
    const Eigen::VectorXd before = GPModel(data, p).means(probes);
    const Eigen::VectorXd after = GPModel(small, p).means(probes);
    CHECK((before - after).cwiseAbs().maxCoeff() < 0.05 * std::sqrt(p.sigma0_2));
}
