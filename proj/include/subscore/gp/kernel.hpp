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
#include <vector>

#include <Eigen/Dense>

namespace subscore::gp {

using Point = Eigen::VectorXd;

/// Wraps an angle into [0, 2 pi).
double wrap_angle(double theta);
Point wrap_point(Point x);

struct KernelParams {
    double gamma2 = 4.0;
    double sigma0_2 = 1.0;
    /// Per-axis trigonometric order V_d; its length fixes D.
    std::vector<int> vd;
    /// Constant prior mean; the GP models y - prior_mean with zero mean.
    double prior_mean = 0.0;

    [[nodiscard]] std::size_t dim() const noexcept { return vd.size(); }
    /// Throws invalid-config on non-positive gamma2/sigma0_2 or V_d < 1.
    void validate() const;

    friend bool operator==(const KernelParams &, const KernelParams &) = default;
};

/// sigma0^2 prod_d (gamma^2 + 2 sum_{v<=V_d} cos(v (x_d - x'_d))) / (gamma^2 + 2 V_d)
double vqe_kernel(const Point &a, const Point &b, const KernelParams &params);

Eigen::MatrixXd kernel_matrix(const std::vector<Point> &a, const std::vector<Point> &b,
                              const KernelParams &params);

/// sum_{v=1}^{order} cos(v * delta)
double cos_sum(double delta, int order);

} // namespace subscore::gp
