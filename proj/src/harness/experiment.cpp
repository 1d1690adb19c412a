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
#include "subscore/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "subscore/error.hpp"

namespace subscore::harness {

sim::VqeProblem build_problem(const RunConfig &config) {
    config.validate();
    return sim::VqeProblem(sim::build_efficient_su2(config.n_qubits, config.n_layers),
                           sim::build_heisenberg(config.n_qubits, config.J, config.h));
}

optim::OptimizerTrace run_trial(const RunConfig &config, const sim::VqeProblem &problem,
                                std::uint64_t seed, const optim::StepHook &hook) {
    const auto x0 = optim::initial_point(problem.circuit().num_params(), seed);
    const std::span<const double> xs(x0.data(), static_cast<std::size_t>(x0.size()));
    const auto channel_seed = optim::stream_seed(seed, 1);

    optim::OptimizerTrace trace;
    if (config.noise == NoiseSource::None) {
        optim::NoiselessChannel channel(problem, config.noiseless_eta2);
        trace = optim::run(config.optimizer, problem, channel, x0, hook);
    } else {
        const double eta2 = config.eta2 > 0.0 ? config.eta2 : problem.single_shot_variance(xs);
        const sim::NoiseModel noise{config.noise == NoiseSource::Gaussian
                                        ? sim::NoiseKind::GaussianExact
                                        : sim::NoiseKind::Sampled,
                                    eta2};
        optim::SimulatorChannel channel(problem, noise, channel_seed);
        trace = optim::run(config.optimizer, problem, channel, x0, hook);
    }
    trace.seed = seed;
    return trace;
}

std::vector<optim::OptimizerTrace> run_experiment(const RunConfig &config) {
    return run_experiment(config, build_problem(config));
}

std::vector<optim::OptimizerTrace> run_experiment(const RunConfig &config,
                                                  const sim::VqeProblem &problem) {
    config.validate();
    std::vector<std::uint64_t> seeds = config.seeds;
    std::sort(seeds.begin(), seeds.end());
    std::vector<optim::OptimizerTrace> out(seeds.size());

    std::size_t workers = config.workers > 0 ? static_cast<std::size_t>(config.workers)
                                             : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, seeds.size());

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= seeds.size()) return;
            try {
                out[i] = run_trial(config, problem, seeds[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(seeds.size());
                return;
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

} // namespace subscore::harness
