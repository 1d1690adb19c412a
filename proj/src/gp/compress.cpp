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
#include "subscore/gp/compress.hpp"

#include "subscore/error.hpp"

namespace subscore::gp {

Dataset compress(const Dataset &data, const KernelParams &params,
                 const CompressionPolicy &policy) {
    if (policy.keep < 2 || policy.keep > policy.trigger) {
        throw Error(ErrorKind::InvalidConfig, "compression needs 2 <= keep <= trigger");
    }
    if (data.size() <= policy.trigger) {
        return data;
    }
    const std::size_t retained = policy.keep - 1;
    const std::size_t cut = data.size() - retained;

    const GPModel prefix(data.slice(0, cut), params);
    const Point &pivot = data.points()[cut];
    const double mu = prefix.mean(pivot);
    // Floor keeps the pivot a valid (strictly positive) observation.
    const double var = std::max(prefix.variance(pivot), 1e-12 * params.sigma0_2);

    Dataset out;
    out.append(pivot, mu, var);
    for (std::size_t i = cut; i < data.size(); ++i) {
        out.append(data.points()[i], data.values()[i], data.noise()[i]);
    }
    return out;
}

} // namespace subscore::gp
