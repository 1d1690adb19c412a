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
#include "subscore/optim/channel.hpp"

#include "subscore/error.hpp"

namespace subscore::optim {

SimulatorChannel::SimulatorChannel(const sim::VqeProblem &problem, sim::NoiseModel noise,
                                   std::uint64_t seed)
    : problem_(&problem), noise_(noise), rng_(seed) {
    if (!(noise.eta2 > 0.0)) throw Error(ErrorKind::InvalidConfig, "eta2 must be positive");
}

sim::Observation SimulatorChannel::observe(std::span<const double> x, std::int64_t shots) {
    return sim::observe(problem_->circuit(), problem_->hamiltonian(), x, shots, noise_, rng_);
}

NoiselessChannel::NoiselessChannel(const sim::VqeProblem &problem, double nominal_eta2)
    : problem_(&problem), eta2_(nominal_eta2) {
    if (!(nominal_eta2 > 0.0)) throw Error(ErrorKind::InvalidConfig, "eta2 must be positive");
}

sim::Observation NoiselessChannel::observe(std::span<const double> x, std::int64_t shots) {
    if (shots < 1) throw Error(ErrorKind::InvalidConfig, "shots must be >= 1");
    return {problem_->energy(x), eta2_ / static_cast<double>(shots)};
}

} // namespace subscore::optim
