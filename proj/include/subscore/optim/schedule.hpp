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

#include <span>
#include <string>
#include <vector>

namespace subscore::optim {

/// CoRe threshold schedule. Shot-denominated knobs map to variances via
/// kappa^2 = eta2 / shots.
struct ScheduleParams {
    int kappa0_shots = 512;
    int C0_shots = 1024; ///< floor: kappa^2 >= eta2 / C0_shots
    double C1 = 1.0;
    int T_ave = 40;

    /// Throws invalid-config unless all positive and C0_shots >= kappa0_shots / 8.
    void validate() const;

    friend bool operator==(const ScheduleParams &, const ScheduleParams &) = default;
};

/// Ordinary least squares slope of values against their index.
double ols_slope(std::span<const double> values);

/// New kappa^2 from the recent best values. With fewer than T_ave entries
/// the current threshold is returned; otherwise
/// max(sqrt(eta2 / C0), -C1 slope(last T_ave))^2.
double update_threshold(std::span<const double> history, const ScheduleParams &sched,
                        double eta2, double current_kappa2);

/// Steps (1-based) at which hyperparameters are refit, written as
/// "count*interval+count*interval+...": e.g. "100*1+20*9" refits at every
/// step 1..100 and then every 9 steps 20 times. After the last segment its
/// interval repeats indefinitely.
class RefitSchedule {
  public:
    RefitSchedule() = default;
    explicit RefitSchedule(const std::string &text);

    [[nodiscard]] bool due(long step) const;
    [[nodiscard]] const std::string &text() const noexcept { return text_; }

  private:
    struct Segment {
        long count;
        long interval;
    };
    std::string text_;
    std::vector<Segment> segments_;
};

} // namespace subscore::optim
