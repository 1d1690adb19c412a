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
#include "subscore/gp/kernel.hpp"

#include <cmath>
#include <numbers>

#include "subscore/error.hpp"

namespace subscore::gp {

double wrap_angle(double theta) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::fmod(theta, two_pi);
    if (r < 0.0) {
        r += two_pi;
    }
    // fmod can hand back exactly 2 pi after the shift for tiny negatives.
    return r >= two_pi ? 0.0 : r;
}

Point wrap_point(Point x) {
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        x[i] = wrap_angle(x[i]);
    }
    return x;
}

void KernelParams::validate() const {
    if (!(gamma2 > 0.0) || !std::isfinite(gamma2)) {
        throw Error(ErrorKind::InvalidConfig, "gamma^2 must be positive");
    }
    if (!(sigma0_2 > 0.0) || !std::isfinite(sigma0_2)) {
        throw Error(ErrorKind::InvalidConfig, "sigma0^2 must be positive");
    }
    if (!std::isfinite(prior_mean)) {
        throw Error(ErrorKind::InvalidConfig, "prior mean must be finite");
    }
    for (int v : vd) {
        if (v < 1) {
            throw Error(ErrorKind::InvalidConfig, "V_d must be >= 1");
        }
    }
}

double cos_sum(double delta, int order) {
    if (order == 1) {
        return std::cos(delta);
    }
    double s = 0.0;
    for (int v = 1; v <= order; ++v) {
        s += std::cos(v * delta);
    }
    return s;
}

double vqe_kernel(const Point &a, const Point &b, const KernelParams &params) {
    double k = params.sigma0_2;
    for (std::size_t d = 0; d < params.vd.size(); ++d) {
        const auto i = static_cast<Eigen::Index>(d);
        const int v = params.vd[d];
        k *= (params.gamma2 + 2.0 * cos_sum(a[i] - b[i], v)) / (params.gamma2 + 2.0 * v);
    }
    return k;
}

Eigen::MatrixXd kernel_matrix(const std::vector<Point> &a, const std::vector<Point> &b,
                              const KernelParams &params) {
    Eigen::MatrixXd k(static_cast<Eigen::Index>(a.size()), static_cast<Eigen::Index>(b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            k(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                vqe_kernel(a[i], b[j], params);
        }
    }
    return k;
}

} // namespace subscore::gp
