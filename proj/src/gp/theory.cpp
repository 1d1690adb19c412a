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
#include "subscore/gp/theory.hpp"

#include <cmath>

namespace subscore::gp {

double uniform_posterior_variance(double sigma2, double gamma2, double sigma0_2, int order) {
    const double r = sigma2 / sigma0_2;
    if (!std::isfinite(r)) {
        return sigma0_2;
    }
    const double g2v = gamma2 + 2.0 * order;
    const double n = 1.0 + 2.0 * order;
    const double num = g2v * g2v * r + n * n * gamma2;
    const double den = (g2v * r + n) * (g2v * r + n * gamma2);
    return sigma2 * num / den;
}

} // namespace subscore::gp
