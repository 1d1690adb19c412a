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
#include "subscore/gp/core.hpp"

#include <numbers>
#include <string>

#include "subscore/error.hpp"

namespace subscore::gp {

std::vector<double> equidistant_shifts(int count) {
    std::vector<double> s(static_cast<std::size_t>(count));
    for (int w = 0; w < count; ++w) {
        s[static_cast<std::size_t>(w)] = 2.0 * std::numbers::pi * w / count;
    }
    return s;
}

std::vector<Point> line_points(const Point &center, std::size_t axis,
                               const std::vector<double> &shifts) {
    std::vector<Point> pts;
    pts.reserve(shifts.size());
    for (double a : shifts) {
        Point p = center;
        p[static_cast<Eigen::Index>(axis)] = wrap_angle(p[static_cast<Eigen::Index>(axis)] + a);
        pts.push_back(std::move(p));
    }
    return pts;
}

bool core_contains(const GPModel &model, double kappa2, const Point &x) {
    if (!(kappa2 > 0.0)) {
        throw Error(ErrorKind::InvalidInput, "CoRe threshold must be positive");
    }
    return model.variance(x) <= kappa2;
}

double max_line_variance(const GPModel &model, const Point &center, std::size_t axis,
                         int grid_size) {
    if (axis >= model.params().dim()) {
        throw Error(ErrorKind::InvalidInput, "axis out of range");
    }
    const int order = model.params().vd[axis];
    if (grid_size < 2 * (1 + 2 * order)) {
        throw Error(ErrorKind::InvalidInput,
                    "line grid of " + std::to_string(grid_size) + " is below 2(1+2V_d)");
    }
    return model.variances(line_points(center, axis, equidistant_shifts(grid_size))).maxCoeff();
}

bool subspace_in_core(const GPModel &model, const Point &center, std::size_t axis,
                      double kappa2, int grid_size) {
    if (!(kappa2 > 0.0)) {
        throw Error(ErrorKind::InvalidInput, "CoRe threshold must be positive");
    }
    return max_line_variance(model, center, axis, grid_size) <= kappa2;
}

LineMinimum minimize_gp_on_line(const GPModel &model, const Point &center, std::size_t axis) {
    if (axis >= model.params().dim()) {
        throw Error(ErrorKind::InvalidInput, "axis out of range");
    }
    const int order = model.params().vd[axis];
    const auto shifts = equidistant_shifts(1 + 2 * order);
    const Eigen::VectorXd mu = model.means(line_points(center, axis, shifts));
    const auto poly = fit_trig_1d(shifts, std::span<const double>(mu.data(), shifts.size()),
                                  std::nullopt, order);
    const auto best = minimize_trig_1d(poly);
    LineMinimum out;
    out.shift = best.theta;
    out.value = best.value;
    out.x = center;
    out.x[static_cast<Eigen::Index>(axis)] =
        wrap_angle(center[static_cast<Eigen::Index>(axis)] + best.theta);
    return out;
}

} // namespace subscore::gp
