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
#include "subscore/gp/trig.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "subscore/error.hpp"
#include "subscore/gp/kernel.hpp"

namespace subscore::gp {

double TrigPoly1D::operator()(double theta) const {
    double f = constant;
    for (int v = 1; v <= order; ++v) {
        f += cos_coef[v - 1] * std::cos(v * theta) + sin_coef[v - 1] * std::sin(v * theta);
    }
    return f;
}

double TrigPoly1D::derivative(double theta) const {
    double f = 0.0;
    for (int v = 1; v <= order; ++v) {
        f += v * (sin_coef[v - 1] * std::cos(v * theta) - cos_coef[v - 1] * std::sin(v * theta));
    }
    return f;
}

double TrigPoly1D::second_derivative(double theta) const {
    double f = 0.0;
    for (int v = 1; v <= order; ++v) {
        f -= v * v * (cos_coef[v - 1] * std::cos(v * theta) + sin_coef[v - 1] * std::sin(v * theta));
    }
    return f;
}

TrigPoly1D fit_trig_1d(std::span<const double> angles, std::span<const double> values,
                       std::optional<std::span<const double>> weights, int order) {
    if (order < 1) {
        throw Error(ErrorKind::InvalidInput, "trigonometric order must be >= 1");
    }
    const auto k = static_cast<Eigen::Index>(angles.size());
    const Eigen::Index cols = 1 + 2 * order;
    if (values.size() != angles.size() || (weights && weights->size() != angles.size())) {
        throw Error(ErrorKind::InvalidInput, "angle/value/weight lengths differ");
    }
    if (k < cols) {
        throw Error(ErrorKind::InvalidInput, "need at least 1 + 2V samples");
    }
    Eigen::MatrixXd design(k, cols);
    Eigen::VectorXd rhs(k);
    for (Eigen::Index i = 0; i < k; ++i) {
        const double t = angles[static_cast<std::size_t>(i)];
        const double w = weights ? std::sqrt((*weights)[static_cast<std::size_t>(i)]) : 1.0;
        design(i, 0) = w;
        for (int v = 1; v <= order; ++v) {
            design(i, v) = w * std::cos(v * t);
            design(i, order + v) = w * std::sin(v * t);
        }
        rhs[i] = w * values[static_cast<std::size_t>(i)];
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    qr.setThreshold(1e-10);
    if (qr.rank() < cols) {
        throw Error(ErrorKind::InvalidInput, "rank-deficient design (duplicate angles?)");
    }
    const Eigen::VectorXd c = qr.solve(rhs);
    TrigPoly1D poly;
    poly.order = order;
    poly.constant = c[0];
    poly.cos_coef.assign(c.data() + 1, c.data() + 1 + order);
    poly.sin_coef.assign(c.data() + 1 + order, c.data() + 1 + 2 * order);
    return poly;
}

TrigMinimum minimize_trig_1d(const TrigPoly1D &poly) {
    double amplitude = 0.0;
    for (int v = 0; v < poly.order; ++v) {
        amplitude = std::max({amplitude, std::abs(poly.cos_coef[v]), std::abs(poly.sin_coef[v])});
    }
    if (amplitude < 1e-14) {
        return {0.0, poly(0.0)};
    }
    if (poly.order == 1) {
        const double a = poly.cos_coef[0];
        const double b = poly.sin_coef[0];
        return {wrap_angle(std::atan2(-b, -a)), poly.constant - std::hypot(a, b)};
    }
    constexpr int grid = 1024;
    double best_t = 0.0;
    double best_f = poly(0.0);
    for (int i = 1; i < grid; ++i) {
        const double t = 2.0 * std::numbers::pi * i / grid;
        const double f = poly(t);
        if (f < best_f) {
            best_f = f;
            best_t = t;
        }
    }
    double t = best_t;
    for (int it = 0; it < 50; ++it) {
        const double g = poly.derivative(t);
        const double h = poly.second_derivative(t);
        if (h <= 0.0) {
            break;
        }
        const double step = g / h;
        t -= step;
        if (std::abs(step) < 1e-15) {
            break;
        }
    }
    const double refined = poly(t);
    if (refined <= best_f && std::abs(t - best_t) < 4.0 * std::numbers::pi / grid) {
        return {wrap_angle(t), refined};
    }
    return {wrap_angle(best_t), best_f};
}

} // namespace subscore::gp
