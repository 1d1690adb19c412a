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

#include "subscore/gp/model.hpp"

namespace subscore::gp {

struct CompressionPolicy {
    std::size_t trigger = 120; ///< compress once more than this many points are held
    std::size_t keep = 100;    ///< size after compression, pivot included

    friend bool operator==(const CompressionPolicy &, const CompressionPolicy &) = default;
};

/// Inducer compression. Above `trigger` points, the oldest points are
/// replaced by one pivot placed at the oldest retained location, carrying a
/// temporary GP's predicted mean (as y) and predicted variance (as noise).
/// The last keep - 1 observations are retained untouched.
Dataset compress(const Dataset &data, const KernelParams &params,
                 const CompressionPolicy &policy = {});

} // namespace subscore::gp
