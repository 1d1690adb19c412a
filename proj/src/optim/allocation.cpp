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
#include "subscore/optim/allocation.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "subscore/error.hpp"

namespace subscore::optim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::int64_t kMaxShots = std::int64_t{1} << 40;

std::int64_t shots_for(double eta2, double variance) {
    if (!(variance > 0.0) || !(eta2 > 0.0))
        throw Error(ErrorKind::InvalidInput, "variances must be positive");
    // Absorb the last-ulp error of eta2 / (eta2 / N).
    const double n = std::ceil(eta2 / variance * (1.0 - 1e-12));
    if (!(n < static_cast<double>(kMaxShots)))
        throw Error(ErrorKind::UnsupportedScale, "shot count exceeds 2^40");
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(n));
}

ShotAllocation make_allocation(std::vector<gp::Point> points, std::vector<std::int64_t> shots,
                               double eta2) {
    ShotAllocation a;
    a.points = std::move(points);
    a.variances.reserve(shots.size());
    for (auto n : shots) a.variances.push_back(n > 0 ? eta2 / static_cast<double>(n) : kInf);
    a.shots = std::move(shots);
    return a;
}

} // namespace

std::int64_t ShotAllocation::total() const {
    return std::accumulate(shots.begin(), shots.end(), std::int64_t{0});
}

ShotAllocation choose_shots_bound(const gp::Point &center, std::size_t axis, int order,
                                  double kappa2, double eta2) {
    if (!(kappa2 > 0.0)) throw Error(ErrorKind::InvalidInput, "kappa2 must be positive");
    const int count = 1 + 2 * order;
    auto points = gp::line_points(center, axis, gp::equidistant_shifts(count));
    const std::int64_t n = shots_for(eta2, kappa2);
    return make_allocation(std::move(points), std::vector<std::int64_t>(count, n), eta2);
}

LineVarianceProbe::LineVarianceProbe(const gp::GPModel &model, const gp::Point &center,
                                     std::size_t axis, int grid_size) {
    if (axis >= model.params().dim()) throw Error(ErrorKind::InvalidInput, "axis out of range");
    const int count = 1 + 2 * model.params().vd[axis];
    if (grid_size < 2 * count)
        throw Error(ErrorKind::InvalidInput, "line grid must have at least 2(1 + 2V) points");
    points_ = gp::line_points(center, axis, gp::equidistant_shifts(count));
    auto all = points_;
    const auto grid = gp::line_points(center, axis, gp::equidistant_shifts(grid_size));
    all.insert(all.end(), grid.begin(), grid.end());
    const Eigen::MatrixXd cov = model.posterior(all).cov;
    cov_nn_ = cov.topLeftCorner(count, count);
    cov_ng_ = cov.topRightCorner(count, grid_size);
    var_g_ = cov.diagonal().tail(grid_size);
}

double LineVarianceProbe::max_variance(const std::vector<double> &noise) const {
    const auto n = static_cast<Eigen::Index>(points_.size());
    if (static_cast<Eigen::Index>(noise.size()) != n)
        throw Error(ErrorKind::InvalidInput, "noise vector length mismatch");
    std::vector<Eigen::Index> active;
    for (Eigen::Index i = 0; i < n; ++i)
        if (std::isfinite(noise[static_cast<std::size_t>(i)])) active.push_back(i);
    if (active.empty()) return var_g_.maxCoeff();

    const auto m = static_cast<Eigen::Index>(active.size());
    Eigen::MatrixXd a(m, m);
    Eigen::MatrixXd b(m, cov_ng_.cols());
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) a(i, j) = cov_nn_(active[i], active[j]);
        a(i, i) += noise[static_cast<std::size_t>(active[i])];
        b.row(i) = cov_ng_.row(active[i]);
    }
    const Eigen::MatrixXd x = a.ldlt().solve(b);
    const Eigen::VectorXd reduction = (b.array() * x.array()).colwise().sum().transpose();
    return (var_g_ - reduction).maxCoeff();
}

ShotAllocation choose_shots_center(const gp::GPModel &model, const gp::Point &center,
                                   std::size_t axis, double kappa2, double eta2,
                                   int grid_size) {
    if (!(kappa2 > 0.0)) throw Error(ErrorKind::InvalidInput, "kappa2 must be positive");
    const LineVarianceProbe probe(model, center, axis, grid_size);
    const std::size_t count = probe.points().size();

    auto noise_for = [&](std::int64_t shifted, std::int64_t at_center) {
        std::vector<double> noise(count, eta2 / static_cast<double>(shifted));
        noise[0] = at_center > 0 ? eta2 / static_cast<double>(at_center) : kInf;
        return noise;
    };
    auto feasible = [&](std::int64_t shifted, std::int64_t at_center) {
        return probe.max_variance(noise_for(shifted, at_center)) <= kappa2;
    };

    // Stage 1: smallest tied shot count. ceil(eta2 / kappa2) is feasible by
    // the uniform-variance bound; rounding noise may need a little more.
    std::int64_t hi = shots_for(eta2, kappa2);
    const std::int64_t cap = std::max<std::int64_t>(64 * hi, 1 << 20);
    while (!feasible(hi, hi)) {
        if (hi >= cap)
            throw Error(ErrorKind::NumericalFailure,
                        "line cannot be brought inside the confident region");
        hi *= 2;
    }
    std::int64_t lo = 0; // always infeasible by convention: no shots at all
    if (feasible(1, 1)) hi = 1;
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        (feasible(mid, mid) ? hi : lo) = mid;
    }
    const std::int64_t tied = hi;

    // Stage 2: relax the center, possibly down to skipping it.
    std::int64_t c_hi = tied, c_lo = -1;
    if (feasible(tied, 0)) c_hi = 0;
    else c_lo = 0;
    while (c_hi - c_lo > 1) {
        const std::int64_t mid = c_lo + (c_hi - c_lo) / 2;
        (feasible(tied, mid) ? c_hi : c_lo) = mid;
    }

    std::vector<std::int64_t> shots(count, tied);
    shots[0] = c_hi;
    return make_allocation(probe.points(), std::move(shots), eta2);
}

} // namespace subscore::optim
