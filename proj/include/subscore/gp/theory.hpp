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

#include "subscore/gp/kernel.hpp"

namespace subscore::gp {

/// Posterior variance anywhere on a line after observing its 1 + 2V
/// equidistant points with equal noise variance `sigma2` and no other data.
/// With r = sigma2 / sigma0^2 and g = gamma^2:
///
///   s = sigma2 ((g + 2V)^2 r + (1 + 2V)^2 g)
///       / (((g + 2V) r + 1 + 2V) ((g + 2V) r + (1 + 2V) g))
///
/// The value is independent of the test angle and always below sigma2.
double uniform_posterior_variance(double sigma2, double gamma2, double sigma0_2, int order);

inline double uniform_posterior_variance(double sigma2, const KernelParams &params,
                                         int order) {
    return uniform_posterior_variance(sigma2, params.gamma2, params.sigma0_2, order);
}

} // namespace subscore::gp
