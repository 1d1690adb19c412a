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
#include "subscore/harness/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "subscore/error.hpp"

namespace subscore::harness {

double quantile(std::vector<double> values, double q) {
    if (values.empty()) throw Error(ErrorKind::InvalidInput, "quantile of an empty sample");
    if (!(q >= 0.0 && q <= 1.0)) throw Error(ErrorKind::InvalidInput, "quantile level outside [0, 1]");
    std::sort(values.begin(), values.end());
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    if (frac == 0.0) return values[lo];
    return values[lo] + frac * (values[hi] - values[lo]);
}

double median(std::vector<double> values) { return quantile(std::move(values), 0.5); }

std::vector<std::int64_t> shot_grid(std::int64_t step, std::int64_t max_shots) {
    if (step <= 0) throw Error(ErrorKind::InvalidInput, "checkpoint spacing must be positive");
    std::vector<std::int64_t> out;
    for (std::int64_t s = step; s <= max_shots; s += step) out.push_back(s);
    return out;
}

std::vector<double> best_so_far(const optim::OptimizerTrace &trace,
                                const std::vector<std::int64_t> &checkpoints, bool fidelity) {
    std::vector<double> out(checkpoints.size(), std::numeric_limits<double>::infinity());
    double best = std::numeric_limits<double>::infinity();
    std::size_t r = 0;
    std::int64_t prev = std::numeric_limits<std::int64_t>::min();
    for (std::size_t c = 0; c < checkpoints.size(); ++c) {
        if (checkpoints[c] < prev)
            throw Error(ErrorKind::InvalidInput, "checkpoints must be non-decreasing");
        prev = checkpoints[c];
        while (r < trace.rows.size() && trace.rows[r].cum_shots <= checkpoints[c]) {
            const auto &row = trace.rows[r++];
            best = std::min(best, fidelity ? row.delta_fidelity : row.delta_energy);
        }
        out[c] = best;
    }
    return out;
}

QuantileCurves aggregate(const std::vector<optim::OptimizerTrace> &traces,
                         const std::vector<std::int64_t> &checkpoints,
                         const std::vector<double> &levels) {
    if (traces.empty()) throw Error(ErrorKind::InvalidInput, "no traces to aggregate");
    QuantileCurves qc;
    qc.checkpoints = checkpoints;
    qc.levels = levels;
    const std::size_t nc = checkpoints.size();
    std::vector<std::vector<double>> e, f;
    for (const auto &t : traces) {
        e.push_back(best_so_far(t, checkpoints, false));
        f.push_back(best_so_far(t, checkpoints, true));
    }
    qc.energy.assign(levels.size(), std::vector<double>(nc));
    qc.fidelity.assign(levels.size(), std::vector<double>(nc));
    qc.contributing.assign(nc, 0);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t c = 0; c < nc; ++c) {
        std::vector<double> ec, fc;
        for (std::size_t t = 0; t < traces.size(); ++t) {
            if (std::isinf(e[t][c])) continue;
            ec.push_back(e[t][c]);
            fc.push_back(f[t][c]);
        }
        qc.contributing[c] = static_cast<int>(ec.size());
        for (std::size_t l = 0; l < levels.size(); ++l) {
            qc.energy[l][c] = ec.empty() ? nan : quantile(ec, levels[l]);
            qc.fidelity[l][c] = fc.empty() ? nan : quantile(fc, levels[l]);
        }
    }
    return qc;
}

std::optional<std::int64_t> shots_to_reach(const optim::OptimizerTrace &trace, double target) {
    for (const auto &row : trace.rows)
        if (row.delta_energy <= target) return row.cum_shots;
    return std::nullopt;
}

} // namespace subscore::harness
