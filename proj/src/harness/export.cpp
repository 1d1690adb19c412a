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
#include "subscore/harness/export.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "subscore/error.hpp"

namespace subscore::harness {

using nlohmann::json;

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string read_all(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_all(const std::string &text, const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
    out << text;
    if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

} // namespace

void write_csv(const std::vector<optim::OptimizerTrace> &traces, std::ostream &out) {
    out << kCsvHeader << '\n';
    for (const auto &t : traces)
        for (const auto &r : t.rows)
            out << t.seed << ',' << r.step << ',' << r.axis << ',' << r.shots_step << ','
                << r.cum_shots << ',' << num(r.kappa) << ',' << num(r.y_hat) << ','
                << num(r.delta_energy) << ',' << num(r.delta_fidelity) << '\n';
}

std::string to_csv(const std::vector<optim::OptimizerTrace> &traces) {
    std::ostringstream out;
    write_csv(traces, out);
    return out.str();
}

void write_csv_file(const std::vector<optim::OptimizerTrace> &traces,
                    const std::filesystem::path &path) {
    write_all(to_csv(traces), path);
}

std::vector<optim::OptimizerTrace> parse_csv(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw Error(ErrorKind::InvalidInput, "missing or unexpected CSV header");
    std::vector<optim::OptimizerTrace> out;
    std::map<std::uint64_t, std::size_t> index;
    long lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) f.push_back(cell);
        if (f.size() != 9)
            throw Error(ErrorKind::InvalidInput, "CSV line " + std::to_string(lineno) +
                                                     " has " + std::to_string(f.size()) +
                                                     " fields");
        try {
            const std::uint64_t seed = std::stoull(f[0]);
            optim::TraceRow r;
            r.step = std::stol(f[1]);
            r.axis = static_cast<std::size_t>(std::stoull(f[2]));
            r.shots_step = std::stoll(f[3]);
            r.cum_shots = std::stoll(f[4]);
            r.kappa = std::stod(f[5]);
            r.y_hat = std::stod(f[6]);
            r.delta_energy = std::stod(f[7]);
            r.delta_fidelity = std::stod(f[8]);
            auto [it, fresh] = index.try_emplace(seed, out.size());
            if (fresh) {
                out.emplace_back();
                out.back().seed = seed;
            }
            out[it->second].rows.push_back(r);
        } catch (const std::logic_error &) {
            throw Error(ErrorKind::InvalidInput, "bad number on CSV line " + std::to_string(lineno));
        }
    }
    return out;
}

std::vector<optim::OptimizerTrace> read_csv_file(const std::filesystem::path &path) {
    return parse_csv(read_all(path));
}

std::string to_json(const ExperimentRecord &record) {
    json traces = json::array();
    for (const auto &t : record.traces) {
        json rows = json::array();
        for (const auto &r : t.rows)
            rows.push_back({r.step, r.axis, r.shots_step, r.cum_shots, r.kappa, r.y_hat,
                            r.delta_energy, r.delta_fidelity});
        traces.push_back({{"seed", t.seed},
                          {"x0", t.x0},
                          {"x_final", t.x_final},
                          {"eta2", t.eta2},
                          {"rows", rows}});
    }
    const json j = {{"config", json::parse(render_config(record.config))},
                    {"row_fields", json::array({"step", "axis", "shots_step", "cum_shots", "kappa",
                                                "y_hat", "delta_energy", "delta_fidelity"})},
                    {"traces", traces}};
    return j.dump(1) + "\n";
}

ExperimentRecord parse_json_record(const std::string &text) {
    ExperimentRecord rec;
    try {
        const json j = json::parse(text);
        rec.config = parse_config(j.at("config").dump());
        for (const auto &jt : j.at("traces")) {
            optim::OptimizerTrace t;
            t.seed = jt.at("seed").get<std::uint64_t>();
            t.x0 = jt.at("x0").get<std::vector<double>>();
            t.x_final = jt.at("x_final").get<std::vector<double>>();
            t.eta2 = jt.at("eta2").get<double>();
            for (const auto &jr : jt.at("rows")) {
                if (!jr.is_array() || jr.size() != 8)
                    throw Error(ErrorKind::InvalidInput, "trace row must have 8 fields");
                optim::TraceRow r;
                r.step = jr[0].get<long>();
                r.axis = jr[1].get<std::size_t>();
                r.shots_step = jr[2].get<std::int64_t>();
                r.cum_shots = jr[3].get<std::int64_t>();
                r.kappa = jr[4].get<double>();
                r.y_hat = jr[5].get<double>();
                r.delta_energy = jr[6].get<double>();
                r.delta_fidelity = jr[7].get<double>();
                t.rows.push_back(r);
            }
            rec.traces.push_back(std::move(t));
        }
    } catch (const json::exception &e) {
        throw Error(ErrorKind::InvalidInput, std::string("bad experiment record: ") + e.what());
    }
    return rec;
}

void write_json_file(const ExperimentRecord &record, const std::filesystem::path &path) {
    write_all(to_json(record), path);
}

ExperimentRecord read_json_file(const std::filesystem::path &path) {
    return parse_json_record(read_all(path));
}

} // namespace subscore::harness
