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
#include "subscore/optim/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "subscore/error.hpp"

namespace subscore::optim {

void ScheduleParams::validate() const {
    if (kappa0_shots < 1 || C0_shots < 1 || !(C1 > 0.0) || T_ave < 2)
        throw Error(ErrorKind::InvalidConfig,
                    "schedule: kappa0_shots, C0_shots, C1 must be positive and T_ave >= 2");
    if (8 * static_cast<long>(C0_shots) < kappa0_shots)
        throw Error(ErrorKind::InvalidConfig, "schedule: C0_shots < kappa0_shots / 8");
}

double ols_slope(std::span<const double> values) {
    const auto n = static_cast<double>(values.size());
    if (values.size() < 2) return 0.0;
    const double tbar = 0.5 * (n - 1.0);
    double ybar = 0.0;
    for (double v : values) ybar += v;
    ybar /= n;
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double dt = static_cast<double>(i) - tbar;
        num += dt * (values[i] - ybar);
        den += dt * dt;
    }
    return num / den;
}

double update_threshold(std::span<const double> history, const ScheduleParams &sched,
                        double eta2, double current_kappa2) {
    const auto window = static_cast<std::size_t>(sched.T_ave);
    if (history.size() < window) return current_kappa2;
    const double slope = ols_slope(history.subspan(history.size() - window));
    const double kappa = std::max(std::sqrt(eta2 / sched.C0_shots), -sched.C1 * slope);
    return kappa * kappa;
}

RefitSchedule::RefitSchedule(const std::string &text) : text_(text) {
    if (!text.empty() && text.back() == '+')
        throw Error(ErrorKind::InvalidConfig, "refit schedule ends with '+'");
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, '+')) {
        const auto star = part.find('*');
        try {
            if (star == std::string::npos) throw std::invalid_argument(part);
            std::size_t used = 0;
            const long count = std::stol(part.substr(0, star), &used);
            const std::string rest = part.substr(star + 1);
            std::size_t used2 = 0;
            const long interval = std::stol(rest, &used2);
            if (used != star || used2 != rest.size() || count < 1 || interval < 1)
                throw std::invalid_argument(part);
            segments_.push_back({count, interval});
        } catch (const std::logic_error &) {
            throw Error(ErrorKind::InvalidConfig, "bad refit schedule segment '" + part + "'");
        }
    }
    if (segments_.empty()) throw Error(ErrorKind::InvalidConfig, "empty refit schedule");
}

bool RefitSchedule::due(long step) const {
    if (segments_.empty() || step < 1) return false;
    long at = 0;
    for (const auto &s : segments_) {
        const long end = at + s.count * s.interval;
        if (step <= end) return (step - at) % s.interval == 0;
        at = end;
    }
    return (step - at) % segments_.back().interval == 0;
}

} // namespace subscore::optim
