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

#include <cstddef>
#include <span>
#include <string>

namespace subscore::harness {

enum class Alternative {
    TwoSided,
    Less,    ///< a tends to be smaller than b
    Greater, ///< a tends to be larger than b
};

Alternative parse_alternative(const std::string &name);

struct WilcoxonResult {
    double statistic = 0.0; ///< sum of ranks of positive a - b
    double p_value = 1.0;
    std::size_t n_used = 0; ///< pairs left after dropping zero differences
    bool exact = false;
};

/// Paired signed-rank test. Needs equal lengths >= 6. Zero differences
/// are dropped, ties get midranks. Up to 25 remaining pairs, the p-value
/// comes from the exact null distribution of the (midrank) statistic;
/// above that, from the normal approximation with continuity and tie
/// corrections.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b,
                                    Alternative alternative = Alternative::TwoSided);

} // namespace subscore::harness
