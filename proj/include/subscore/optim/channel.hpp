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
#include <span>

#include "subscore/sim/observe.hpp"

namespace subscore::optim {

/// Source of noisy energy estimates. Shots are counted per operator group.
class ObservationChannel {
  public:
    virtual ~ObservationChannel() = default;
    virtual sim::Observation observe(std::span<const double> x, std::int64_t shots) = 0;
    /// Single-shot variance the optimizer budgets against.
    [[nodiscard]] virtual double eta2() const = 0;
};

/// Estimates from the statevector simulator with its own rng stream.
class SimulatorChannel final : public ObservationChannel {
  public:
    SimulatorChannel(const sim::VqeProblem &problem, sim::NoiseModel noise, std::uint64_t seed);

    sim::Observation observe(std::span<const double> x, std::int64_t shots) override;
    [[nodiscard]] double eta2() const override { return noise_.eta2; }

  private:
    const sim::VqeProblem *problem_;
    sim::NoiseModel noise_;
    sim::Rng rng_;
};

/// Exact energies. The reported variance is still eta2 / shots so the GP
/// and the shot allocation behave as in the noisy case, only with a tiny
/// nominal eta2.
class NoiselessChannel final : public ObservationChannel {
  public:
    explicit NoiselessChannel(const sim::VqeProblem &problem, double nominal_eta2 = 1e-8);

    sim::Observation observe(std::span<const double> x, std::int64_t shots) override;
    [[nodiscard]] double eta2() const override { return eta2_; }

  private:
    const sim::VqeProblem *problem_;
    double eta2_;
};

} // namespace subscore::optim
