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
#include <vector>

#include "subscore/gp/core.hpp"
#include "subscore/gp/model.hpp"

namespace subscore::optim {

/// Shots for the 1 + 2V equidistant points about a center. Index 0 is the
/// center itself.
struct ShotAllocation {
    std::vector<gp::Point> points;
    std::vector<std::int64_t> shots;
    /// eta2 / shots, +inf where a point is skipped.
    std::vector<double> variances;

    [[nodiscard]] std::int64_t total() const;
};

/// Every point gets ceil(eta2 / kappa2) shots.
ShotAllocation choose_shots_bound(const gp::Point &center, std::size_t axis, int order,
                                  double kappa2, double eta2);

/// Posterior variance on the line grid after hypothetically adding the
/// line points with given noise. The base posterior is computed once, so
/// each query costs a (1+2V) x (1+2V) solve.
class LineVarianceProbe {
  public:
    LineVarianceProbe(const gp::GPModel &model, const gp::Point &center, std::size_t axis,
                      int grid_size = gp::kDefaultLineGrid);

    [[nodiscard]] const std::vector<gp::Point> &points() const noexcept { return points_; }
    /// Largest grid variance; entries equal to +inf are left out.
    [[nodiscard]] double max_variance(const std::vector<double> &noise) const;

  private:
    std::vector<gp::Point> points_;
    Eigen::MatrixXd cov_nn_;
    Eigen::MatrixXd cov_ng_;
    Eigen::VectorXd var_g_;
};

/// Fewest shots that keep the whole line inside the CoRe. Stage 1 ties all
/// points to N_s shots and looks for the smallest feasible N_s in
/// [1, ceil(eta2 / kappa2)]. Stage 2 keeps the shifted points at N_s and
/// lowers the center to the smallest feasible N_0 in [0, N_s]. Both stages
/// bisect on integers, which is valid because variance is monotone in noise.
ShotAllocation choose_shots_center(const gp::GPModel &model, const gp::Point &center,
                                   std::size_t axis, double kappa2, double eta2,
                                   int grid_size = gp::kDefaultLineGrid);

} // namespace subscore::optim
