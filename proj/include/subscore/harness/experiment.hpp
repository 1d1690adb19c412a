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

#include <vector>

#include "subscore/harness/config.hpp"
#include "subscore/optim/optimizer.hpp"
#include "subscore/sim/observe.hpp"

namespace subscore::harness {

sim::VqeProblem build_problem(const RunConfig &config);

/// One trial: start point and noise stream both derive from `seed`.
optim::OptimizerTrace run_trial(const RunConfig &config, const sim::VqeProblem &problem,
                                std::uint64_t seed, const optim::StepHook &hook = {});

/// One trace per seed, sorted by seed, computed on a worker pool.
std::vector<optim::OptimizerTrace> run_experiment(const RunConfig &config);
std::vector<optim::OptimizerTrace> run_experiment(const RunConfig &config,
                                                  const sim::VqeProblem &problem);

} // namespace subscore::harness
