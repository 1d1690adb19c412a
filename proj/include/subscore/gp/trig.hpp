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

#include <optional>
#include <span>
#include <vector>

namespace subscore::gp {

/// f(t) = constant + sum_v cos_coef[v-1] cos(v t) + sin_coef[v-1] sin(v t)
struct TrigPoly1D {
    int order = 1;
    double constant = 0.0;
    std::vector<double> cos_coef;
    std::vector<double> sin_coef;

    [[nodiscard]] double operator()(double theta) const;
    [[nodiscard]] double derivative(double theta) const;
    [[nodiscard]] double second_derivative(double theta) const;
};

/// (Weighted) least squares in the plain basis (1, cos vt, sin vt). Needs at
/// least 1 + 2V angles with a full-rank design; throws invalid-input
/// otherwise.
TrigPoly1D fit_trig_1d(std::span<const double> angles, std::span<const double> values,
                       std::optional<std::span<const double>> weights, int order);

struct TrigMinimum {
    double theta = 0.0; ///< in [0, 2 pi)
    double value = 0.0;
};

/// Global minimum. Order 1 is closed form; higher orders use a 1024-point
/// scan followed by Newton refinement.
TrigMinimum minimize_trig_1d(const TrigPoly1D &poly);

} // namespace subscore::gp
