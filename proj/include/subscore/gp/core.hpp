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

#include "subscore/gp/model.hpp"
#include "subscore/gp/trig.hpp"

namespace subscore::gp {

/// Dense test grid used for the "whole line inside the CoRe" check.
inline constexpr int kDefaultLineGrid = 64;

/// alpha_w = 2 pi w / count, w = 0..count-1.
std::vector<double> equidistant_shifts(int count);

/// center + alpha e_axis for each alpha (wrapped).
std::vector<Point> line_points(const Point &center, std::size_t axis,
                               const std::vector<double> &shifts);

/// Posterior variance at x is <= kappa2.
bool core_contains(const GPModel &model, double kappa2, const Point &x);

/// Posterior variance <= kappa2 at `grid_size` equidistant angles on the
/// line through `center` along `axis`. grid_size must be >= 2 (1 + 2 V_d).
bool subspace_in_core(const GPModel &model, const Point &center, std::size_t axis,
                      double kappa2, int grid_size = kDefaultLineGrid);

/// Largest posterior variance on that grid.
double max_line_variance(const GPModel &model, const Point &center, std::size_t axis,
                         int grid_size = kDefaultLineGrid);

struct LineMinimum {
    Point x;
    double value = 0.0;
    double shift = 0.0; ///< minimizing angle offset from the center
};

/// The posterior mean restricted to a coordinate line is an order-V_d
/// trigonometric polynomial; recover it from 1 + 2V_d equidistant samples and
/// minimize it analytically.
LineMinimum minimize_gp_on_line(const GPModel &model, const Point &center, std::size_t axis);

} // namespace subscore::gp
