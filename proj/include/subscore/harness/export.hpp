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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "subscore/harness/config.hpp"
#include "subscore/optim/optimizer.hpp"

namespace subscore::harness {

inline constexpr const char *kCsvHeader =
    "seed,step,axis,shots_step,cum_shots,kappa,y_hat,delta_energy,delta_fidelity";

void write_csv(const std::vector<optim::OptimizerTrace> &traces, std::ostream &out);
std::string to_csv(const std::vector<optim::OptimizerTrace> &traces);
void write_csv_file(const std::vector<optim::OptimizerTrace> &traces,
                    const std::filesystem::path &path);
/// Rows grouped back into traces (ordered by first appearance). Only the
/// row fields survive a CSV round trip.
std::vector<optim::OptimizerTrace> read_csv_file(const std::filesystem::path &path);
std::vector<optim::OptimizerTrace> parse_csv(const std::string &text);

struct ExperimentRecord {
    RunConfig config;
    std::vector<optim::OptimizerTrace> traces;
    friend bool operator==(const ExperimentRecord &, const ExperimentRecord &) = default;
};

std::string to_json(const ExperimentRecord &record);
ExperimentRecord parse_json_record(const std::string &text);
void write_json_file(const ExperimentRecord &record, const std::filesystem::path &path);
ExperimentRecord read_json_file(const std::filesystem::path &path);

} // namespace subscore::harness
