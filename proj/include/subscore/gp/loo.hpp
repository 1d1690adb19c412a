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

#include <numbers>
#include <vector>

#include "subscore/gp/model.hpp"

namespace subscore::gp {

struct GammaSearch {
    int steps = 90;
    double gamma_min = std::numbers::sqrt2;
    double gamma_max = 20.0;

    friend bool operator==(const GammaSearch &, const GammaSearch &) = default;
};

/// `steps` log-spaced gamma values (not squared) from gamma_min to gamma_max.
std::vector<double> gamma_grid(const GammaSearch &search);

/// Summed leave-one-out negative log predictive density, from the closed
/// form mu_-i = y_i - [A y]_i / A_ii, v_-i = 1 / A_ii with A = (K + Diag(sigma))^-1.
double loo_nlpd(const Dataset &data, const KernelParams &params);

/// gamma^2 on the grid minimizing loo_nlpd; ties go to the larger gamma.
/// With fewer than 3 points `params.gamma2` is returned unchanged.
double loo_gamma_search(const Dataset &data, const KernelParams &params,
                        const GammaSearch &search = {});

} // namespace subscore::gp
