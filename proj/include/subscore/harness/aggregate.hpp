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

#include <cstdint>
#include <optional>
#include <vector>

#include "subscore/optim/optimizer.hpp"

namespace subscore::harness {

/// Linear interpolation between order statistics (position q (n - 1)).
double quantile(std::vector<double> values, double q);

double median(std::vector<double> values);

/// step, 2 step, ... up to and including max_shots.
std::vector<std::int64_t> shot_grid(std::int64_t step, std::int64_t max_shots);

/// Best-so-far value at each checkpoint (running minimum over rows with
/// cum_shots <= checkpoint); +inf before the first step.
std::vector<double> best_so_far(const optim::OptimizerTrace &trace,
                                const std::vector<std::int64_t> &checkpoints, bool fidelity);

struct QuantileCurves {
    std::vector<std::int64_t> checkpoints;
    std::vector<double> levels;
    std::vector<std::vector<double>> energy;   ///< [level][checkpoint]
    std::vector<std::vector<double>> fidelity; ///< [level][checkpoint]
    std::vector<int> contributing;             ///< traces with a value at each checkpoint
};

/// Throws invalid-input on an empty trace set. Checkpoints no trace has
/// reached yet get NaN quantiles.
QuantileCurves aggregate(const std::vector<optim::OptimizerTrace> &traces,
                         const std::vector<std::int64_t> &checkpoints,
                         const std::vector<double> &levels = {0.25, 0.5, 0.75});

/// Cumulative shots at the first row with delta_energy <= target.
std::optional<std::int64_t> shots_to_reach(const optim::OptimizerTrace &trace, double target);

} // namespace subscore::harness
