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
// Command-line front end: run experiments, aggregate traces, compare
// optimizers, print configurations.
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "subscore/error.hpp"
#include "subscore/harness/aggregate.hpp"
#include "subscore/harness/config.hpp"
#include "subscore/harness/experiment.hpp"
#include "subscore/harness/export.hpp"
#include "subscore/harness/wilcoxon.hpp"

using namespace subscore;
using namespace subscore::harness;

namespace {

/// Products of integers and powers, e.g. "3*10**6" or "1000000".
std::int64_t parse_count(const std::string &text) {
    std::int64_t total = 1;
    std::size_t pos = 0;
    auto integer = [&]() -> std::int64_t {
        std::size_t end = pos;
        while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
        if (end == pos) throw Error(ErrorKind::InvalidConfig, "bad count '" + text + "'");
        const auto v = std::stoll(text.substr(pos, end - pos));
        pos = end;
        return v;
    };
    for (;;) {
        std::int64_t factor = integer();
        if (text.compare(pos, 2, "**") == 0) {
            pos += 2;
            const auto e = integer();
            std::int64_t p = 1;
            for (std::int64_t k = 0; k < e; ++k) p *= factor;
            factor = p;
        }
        total *= factor;
        if (pos == text.size()) return total;
        if (text[pos] != '*') throw Error(ErrorKind::InvalidConfig, "bad count '" + text + "'");
        ++pos;
    }
}

bool parse_bool(const std::string &s) {
    if (s == "true" || s == "True" || s == "1") return true;
    if (s == "false" || s == "False" || s == "0") return false;
    throw Error(ErrorKind::InvalidConfig, "expected true or false, got '" + s + "'");
}

struct Overrides {
    std::string config_path;
    std::optional<int> n_qubits, n_layers, corethresh, corethresh_width, nft_shots, nft_recal,
        gamma_steps, workers, line_grid;
    std::optional<std::string> circuit, pbc, kernel, strategy, noise, n_iter, seeds, interval,
        quantiles;
    std::optional<double> coremin_scale, corethresh_scale, eta2, max_gamma, sigma0, gamma2;
    std::optional<long> max_steps;
    std::optional<std::string> output_csv, output_json;

    void attach(CLI::App &app) {
        app.add_option("--config", config_path, "JSON config file (flags override it)");
        app.add_option("--n-qbits,--n-qubits", n_qubits, "number of qubits");
        app.add_option("--n-layers", n_layers, "circuit layers");
        app.add_option("--circuit", circuit, "ansatz name (esu2)");
        app.add_option("--pbc", pbc, "periodic boundaries (only False is supported)");
        app.add_option("--kernel", kernel, "GP kernel (vqe)");
        app.add_option("--readout-strategy", strategy, "center, bound or nft");
        app.add_option("--corethresh", corethresh, "initial shots for the CoRe threshold");
        app.add_option("--corethresh-width,--corethresh_width", corethresh_width,
                       "steps in the threshold regression window");
        app.add_option("--coremin-scale,--coremin_scale", coremin_scale,
                       "shot count setting the threshold floor");
        app.add_option("--corethresh-scale,--corethresh_scale", corethresh_scale,
                       "slope multiplier for the threshold");
        app.add_option("--n-iter", n_iter, "shot budget per operator group, e.g. 3*10**6");
        app.add_option("--max-steps", max_steps, "stop after this many steps (0 = budget only)");
        app.add_option("--seeds", seeds, "seed list such as 0-19 or 1,5,9");
        app.add_option("--noise", noise, "gaussian, sampled or none");
        app.add_option("--eta2", eta2, "single-shot variance (0 = estimate at the start point)");
        app.add_option("--max-gamma,--max_gamma", max_gamma, "largest gamma in the grid search");
        app.add_option("--gamma-steps", gamma_steps, "grid size of the gamma search");
        app.add_option("--gamma-interval,--interval", interval,
                       "refit schedule count*interval+..., e.g. 100*1+20*9+10*100");
        app.add_option("--initial-gamma2", gamma2, "squared kernel width before the first refit");
        app.add_option("--sigma0", sigma0, "GP prior std (0 = coefficient 1-norm)");
        app.add_option("--nft-shots", nft_shots, "shots per NFT observation");
        app.add_option("--nft-recal", nft_recal,
                       "NFT re-measures its center every this many steps (0 never, -1 every D)");
        app.add_option("--line-grid", line_grid, "grid points per line check");
        app.add_option("--quantiles", quantiles, "quantile levels, e.g. 0.25,0.5,0.75");
        app.add_option("--workers", workers, "worker threads (0 = all cores)");
        app.add_option("--output-csv", output_csv, "trace CSV path");
        app.add_option("--output-json", output_json, "experiment record JSON path");
    }

    RunConfig build() const {
        RunConfig c = config_path.empty() ? RunConfig{} : load_config(config_path);
        auto &o = c.optimizer;
        if (n_qubits) c.n_qubits = *n_qubits;
        if (n_layers) c.n_layers = *n_layers;
        if (circuit) c.circuit = *circuit;
        if (pbc) c.pbc = parse_bool(*pbc);
        if (kernel) c.kernel = *kernel;
        if (strategy) o.variant = optim::parse_variant(*strategy);
        if (corethresh) o.schedule.kappa0_shots = *corethresh;
        if (corethresh_width) o.schedule.T_ave = *corethresh_width;
        if (coremin_scale) o.schedule.C0_shots = *coremin_scale;
        if (corethresh_scale) o.schedule.C1 = *corethresh_scale;
        if (n_iter) o.budget = parse_count(*n_iter);
        if (max_steps) o.max_steps = *max_steps;
        if (seeds) c.seeds = parse_seed_list(*seeds);
        if (noise) c.noise = parse_noise(*noise);
        if (eta2) c.eta2 = *eta2;
        if (max_gamma) o.gamma_search.gamma_max = *max_gamma;
        if (gamma_steps) o.gamma_search.steps = *gamma_steps;
        if (interval) o.gamma_refit = *interval;
        if (gamma2) o.initial_gamma2 = *gamma2;
        if (sigma0) o.sigma0 = *sigma0;
        if (nft_shots) o.nft_shots = *nft_shots;
        if (nft_recal) o.nft_recal_interval = *nft_recal;
        if (line_grid) o.line_grid = *line_grid;
        if (quantiles) {
            c.quantiles.clear();
            std::stringstream in(*quantiles);
            std::string q;
            while (std::getline(in, q, ',')) {
                try {
                    c.quantiles.push_back(std::stod(q));
                } catch (const std::logic_error &) {
                    throw Error(ErrorKind::InvalidConfig, "bad quantile '" + q + "'");
                }
            }
        }
        if (workers) c.workers = *workers;
        if (output_csv) c.output_csv = *output_csv;
        if (output_json) c.output_json = *output_json;
        c.validate();
        return c;
    }
};

int cmd_run(const RunConfig &c) {
    const auto traces = run_experiment(c);
    if (!c.output_csv.empty()) write_csv_file(traces, c.output_csv);
    if (!c.output_json.empty()) write_json_file({c, traces}, c.output_json);
    if (c.output_csv.empty() && c.output_json.empty()) write_csv(traces, std::cout);

    std::vector<double> finals;
    for (const auto &t : traces) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto &r : t.rows) best = std::min(best, r.delta_energy);
        finals.push_back(best);
        std::fprintf(stderr, "seed %llu: %zu steps, %lld shots, best dE %.6g\n",
                     static_cast<unsigned long long>(t.seed), t.rows.size(),
                     static_cast<long long>(t.rows.back().cum_shots), best);
    }
    std::fprintf(stderr, "%s: median best dE %.6g over %zu seeds\n",
                 optim::to_string(c.optimizer.variant), median(finals), finals.size());
    return 0;
}

int cmd_aggregate(const std::string &input, std::int64_t step, std::int64_t max_shots,
                  const std::vector<double> &levels) {
    const auto traces = read_csv_file(input);
    if (max_shots <= 0)
        for (const auto &t : traces)
            for (const auto &r : t.rows) max_shots = std::max(max_shots, r.cum_shots);
    const auto qc = aggregate(traces, shot_grid(step, max_shots), levels);
    std::cout << "cum_shots,contributing";
    for (double l : levels) std::cout << ",energy_q" << l;
    for (double l : levels) std::cout << ",fidelity_q" << l;
    std::cout << '\n';
    for (std::size_t c = 0; c < qc.checkpoints.size(); ++c) {
        std::cout << qc.checkpoints[c] << ',' << qc.contributing[c];
        char buf[40];
        for (const auto &row : qc.energy) {
            std::snprintf(buf, sizeof buf, ",%.12g", row[c]);
            std::cout << buf;
        }
        for (const auto &row : qc.fidelity) {
            std::snprintf(buf, sizeof buf, ",%.12g", row[c]);
            std::cout << buf;
        }
        std::cout << '\n';
    }
    return 0;
}

/// Best dE per seed, for the seeds present in both files.
int cmd_compare(const std::string &a_path, const std::string &b_path, const std::string &alt) {
    const auto alternative = parse_alternative(alt);
    auto finals = [](const std::string &path) {
        std::map<std::uint64_t, double> out;
        for (const auto &t : read_csv_file(path)) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto &r : t.rows) best = std::min(best, r.delta_energy);
            out[t.seed] = best;
        }
        return out;
    };
    const auto fa = finals(a_path), fb = finals(b_path);
    std::vector<double> a, b;
    for (const auto &[seed, v] : fa)
        if (auto it = fb.find(seed); it != fb.end()) {
            a.push_back(v);
            b.push_back(it->second);
        }
    const auto r = wilcoxon_signed_rank(a, b, alternative);
    std::printf("pairs %zu (used %zu)\nmedian_a %.6g\nmedian_b %.6g\nW+ %.1f\np %.6g (%s, %s)\n",
                a.size(), r.n_used, median(a), median(b), r.statistic, r.p_value, alt.c_str(),
                r.exact ? "exact" : "normal approximation");
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Adaptive shot budgeting for VQE on a statevector simulator"};
    app.require_subcommand(1);

    Overrides run_opts, cfg_opts;
    auto *run = app.add_subcommand("run", "run seeded trials and export traces");
    run_opts.attach(*run);

    auto *config = app.add_subcommand("config", "print the effective configuration as JSON");
    cfg_opts.attach(*config);

    std::string agg_input;
    std::int64_t agg_step = 50'000, agg_max = 0;
    std::string agg_levels = "0.25,0.5,0.75";
    auto *agg = app.add_subcommand("aggregate", "quantile curves of best-so-far errors");
    agg->add_option("input", agg_input, "trace CSV")->required();
    agg->add_option("--checkpoint-step", agg_step, "spacing of shot checkpoints");
    agg->add_option("--max-shots", agg_max, "last checkpoint (0 = longest trace)");
    agg->add_option("--quantiles", agg_levels, "quantile levels");

    std::string cmp_a, cmp_b, cmp_alt = "two-sided";
    auto *cmp = app.add_subcommand("compare", "paired signed-rank test on best errors");
    cmp->add_option("a", cmp_a, "trace CSV of the first optimizer")->required();
    cmp->add_option("b", cmp_b, "trace CSV of the second optimizer")->required();
    cmp->add_option("--alternative", cmp_alt, "two-sided, less (a < b) or greater");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }

    try {
        if (*run) return cmd_run(run_opts.build());
        if (*config) {
            std::cout << render_config(cfg_opts.build());
            return 0;
        }
        if (*agg) {
            std::vector<double> levels;
            std::stringstream in(agg_levels);
            std::string q;
            while (std::getline(in, q, ',')) levels.push_back(std::stod(q));
            return cmd_aggregate(agg_input, agg_step, agg_max, levels);
        }
        if (*cmp) return cmd_compare(cmp_a, cmp_b, cmp_alt);
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
