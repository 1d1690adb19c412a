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
#include "subscore/harness/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "subscore/error.hpp"

namespace subscore::harness {

using nlohmann::json;

const char *to_string(NoiseSource n) {
    switch (n) {
    case NoiseSource::Gaussian: return "gaussian";
    case NoiseSource::Sampled: return "sampled";
    case NoiseSource::None: return "none";
    }
    return "?";
}

NoiseSource parse_noise(const std::string &name) {
    if (name == "gaussian") return NoiseSource::Gaussian;
    if (name == "sampled") return NoiseSource::Sampled;
    if (name == "none") return NoiseSource::None;
    throw Error(ErrorKind::InvalidConfig,
                "unknown noise model '" + name + "' (expected gaussian, sampled or none)");
}

void RunConfig::validate() const {
    if (n_qubits < 2 || n_qubits > 12)
        throw Error(ErrorKind::InvalidConfig, "n_qubits must be in [2, 12]");
    if (n_layers < 0) throw Error(ErrorKind::InvalidConfig, "n_layers must be >= 0");
    if (circuit != "esu2")
        throw Error(ErrorKind::InvalidConfig, "unsupported circuit '" + circuit + "'");
    if (pbc) throw Error(ErrorKind::InvalidConfig, "periodic boundary conditions are not supported");
    if (kernel != "vqe")
        throw Error(ErrorKind::InvalidConfig, "unsupported kernel '" + kernel + "'");
    bool any = false;
    for (double c : J) any = any || c != 0.0;
    for (double c : h) any = any || c != 0.0;
    for (double c : J)
        if (!std::isfinite(c)) throw Error(ErrorKind::InvalidConfig, "couplings must be finite");
    for (double c : h)
        if (!std::isfinite(c)) throw Error(ErrorKind::InvalidConfig, "fields must be finite");
    if (!any) throw Error(ErrorKind::InvalidConfig, "all couplings and fields are zero");
    optimizer.validate();
    if (!(eta2 >= 0.0) || !std::isfinite(eta2))
        throw Error(ErrorKind::InvalidConfig, "eta2 must be >= 0 (0 = estimate)");
    if (!(noiseless_eta2 > 0.0)) throw Error(ErrorKind::InvalidConfig, "noiseless eta2 must be > 0");
    if (seeds.empty()) throw Error(ErrorKind::InvalidConfig, "seed list is empty");
    if (std::set<std::uint64_t>(seeds.begin(), seeds.end()).size() != seeds.size())
        throw Error(ErrorKind::InvalidConfig, "duplicate seeds");
    if (quantiles.empty()) throw Error(ErrorKind::InvalidConfig, "quantile list is empty");
    for (double q : quantiles)
        if (!(q >= 0.0 && q <= 1.0))
            throw Error(ErrorKind::InvalidConfig, "quantiles must lie in [0, 1]");
    if (workers < 0) throw Error(ErrorKind::InvalidConfig, "workers must be >= 0");
}

namespace {

json schedule_json(const optim::ScheduleParams &s) {
    return {{"kappa0_shots", s.kappa0_shots},
            {"C0_shots", s.C0_shots},
            {"C1", s.C1},
            {"T_ave", s.T_ave}};
}

json optimizer_json(const optim::OptimizerConfig &o) {
    return {{"variant", optim::to_string(o.variant)},
            {"schedule", schedule_json(o.schedule)},
            {"gamma_search",
             {{"steps", o.gamma_search.steps},
              {"gamma_min", o.gamma_search.gamma_min},
              {"gamma_max", o.gamma_search.gamma_max}}},
            {"gamma_refit", o.gamma_refit},
            {"compression",
             {{"trigger", o.compression.trigger}, {"keep", o.compression.keep}}},
            {"initial_gamma2", o.initial_gamma2},
            {"sigma0", o.sigma0},
            {"prior_mean_from_start", o.prior_mean_from_start},
            {"nft_shots", o.nft_shots},
            {"nft_recal_interval", o.nft_recal_interval},
            {"line_grid", o.line_grid},
            {"budget", o.budget},
            {"max_steps", o.max_steps}};
}

/// Reads `key` into `out` when present; unknown keys are rejected by the caller.
template <class T> void take(const json &j, const char *key, T &out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

void reject_unknown(const json &j, std::initializer_list<const char *> keys, const char *where) {
    if (!j.is_object()) throw Error(ErrorKind::InvalidConfig, std::string(where) + " must be an object");
    for (const auto &item : j.items()) {
        if (std::none_of(keys.begin(), keys.end(),
                         [&](const char *k) { return item.key() == k; }))
            throw Error(ErrorKind::InvalidConfig,
                        "unknown key '" + item.key() + "' in " + where);
    }
}

optim::OptimizerConfig optimizer_from(const json &j) {
    reject_unknown(j,
                   {"variant", "schedule", "gamma_search", "gamma_refit", "compression",
                    "initial_gamma2", "sigma0", "prior_mean_from_start", "nft_shots",
                    "nft_recal_interval", "line_grid", "budget", "max_steps"},
                   "optimizer");
    optim::OptimizerConfig o;
    if (j.contains("variant")) o.variant = optim::parse_variant(j.at("variant").get<std::string>());
    if (j.contains("schedule")) {
        const auto &s = j.at("schedule");
        reject_unknown(s, {"kappa0_shots", "C0_shots", "C1", "T_ave"}, "schedule");
        take(s, "kappa0_shots", o.schedule.kappa0_shots);
        take(s, "C0_shots", o.schedule.C0_shots);
        take(s, "C1", o.schedule.C1);
        take(s, "T_ave", o.schedule.T_ave);
    }
    if (j.contains("gamma_search")) {
        const auto &g = j.at("gamma_search");
        reject_unknown(g, {"steps", "gamma_min", "gamma_max"}, "gamma_search");
        take(g, "steps", o.gamma_search.steps);
        take(g, "gamma_min", o.gamma_search.gamma_min);
        take(g, "gamma_max", o.gamma_search.gamma_max);
    }
    if (j.contains("compression")) {
        const auto &c = j.at("compression");
        reject_unknown(c, {"trigger", "keep"}, "compression");
        take(c, "trigger", o.compression.trigger);
        take(c, "keep", o.compression.keep);
    }
    take(j, "gamma_refit", o.gamma_refit);
    take(j, "initial_gamma2", o.initial_gamma2);
    take(j, "sigma0", o.sigma0);
    take(j, "prior_mean_from_start", o.prior_mean_from_start);
    take(j, "nft_shots", o.nft_shots);
    take(j, "nft_recal_interval", o.nft_recal_interval);
    take(j, "line_grid", o.line_grid);
    take(j, "budget", o.budget);
    take(j, "max_steps", o.max_steps);
    return o;
}

} // namespace

std::string render_config(const RunConfig &c) {
    const json j = {{"n_qubits", c.n_qubits},
                    {"n_layers", c.n_layers},
                    {"circuit", c.circuit},
                    {"pbc", c.pbc},
                    {"kernel", c.kernel},
                    {"J", c.J},
                    {"h", c.h},
                    {"optimizer", optimizer_json(c.optimizer)},
                    {"noise", to_string(c.noise)},
                    {"eta2", c.eta2},
                    {"noiseless_eta2", c.noiseless_eta2},
                    {"seeds", c.seeds},
                    {"quantiles", c.quantiles},
                    {"workers", c.workers},
                    {"output_csv", c.output_csv},
                    {"output_json", c.output_json}};
    return j.dump(2) + "\n";
}

RunConfig parse_config(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw Error(ErrorKind::InvalidConfig, std::string("config is not valid JSON: ") + e.what());
    }
    RunConfig c;
    try {
        reject_unknown(j,
                       {"n_qubits", "n_layers", "circuit", "pbc", "kernel", "J", "h",
                        "optimizer", "noise", "eta2", "noiseless_eta2", "seeds", "quantiles",
                        "workers", "output_csv", "output_json"},
                       "config");
        take(j, "n_qubits", c.n_qubits);
        take(j, "n_layers", c.n_layers);
        take(j, "circuit", c.circuit);
        take(j, "pbc", c.pbc);
        take(j, "kernel", c.kernel);
        take(j, "J", c.J);
        take(j, "h", c.h);
        if (j.contains("optimizer")) c.optimizer = optimizer_from(j.at("optimizer"));
        if (j.contains("noise")) c.noise = parse_noise(j.at("noise").get<std::string>());
        take(j, "eta2", c.eta2);
        take(j, "noiseless_eta2", c.noiseless_eta2);
        take(j, "seeds", c.seeds);
        take(j, "quantiles", c.quantiles);
        take(j, "workers", c.workers);
        take(j, "output_csv", c.output_csv);
        take(j, "output_json", c.output_json);
    } catch (const json::exception &e) {
        throw Error(ErrorKind::InvalidConfig, std::string("bad config value: ") + e.what());
    }
    return c;
}

RunConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open config file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

void save_config(const RunConfig &config, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Io, "cannot write config file " + path.string());
    out << render_config(config);
    if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

std::vector<std::uint64_t> parse_seed_list(const std::string &text) {
    std::vector<std::uint64_t> out;
    std::stringstream in(text);
    std::string part;
    auto number = [&](const std::string &s) {
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            if (s.empty() || s[0] == '-' || s[0] == '+') throw std::invalid_argument(s);
            v = std::stoull(s, &used);
        } catch (const std::logic_error &) {
            throw Error(ErrorKind::InvalidConfig, "bad seed '" + s + "'");
        }
        if (used != s.size()) throw Error(ErrorKind::InvalidConfig, "bad seed '" + s + "'");
        return static_cast<std::uint64_t>(v);
    };
    while (std::getline(in, part, ',')) {
        const auto dash = part.find('-');
        if (dash == std::string::npos) {
            out.push_back(number(part));
            continue;
        }
        const auto lo = number(part.substr(0, dash)), hi = number(part.substr(dash + 1));
        if (hi < lo || hi - lo > 1'000'000)
            throw Error(ErrorKind::InvalidConfig, "bad seed range '" + part + "'");
        for (auto s = lo; s <= hi; ++s) out.push_back(s);
    }
    if (out.empty()) throw Error(ErrorKind::InvalidConfig, "empty seed list");
    return out;
}

} // namespace subscore::harness
