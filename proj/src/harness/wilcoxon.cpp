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
#include "subscore/harness/wilcoxon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "subscore/error.hpp"

namespace subscore::harness {

Alternative parse_alternative(const std::string &name) {
    if (name == "two-sided") return Alternative::TwoSided;
    if (name == "less") return Alternative::Less;
    if (name == "greater") return Alternative::Greater;
    throw Error(ErrorKind::InvalidConfig,
                "unknown alternative '" + name + "' (expected two-sided, less or greater)");
}

namespace {

constexpr std::size_t kExactLimit = 25;

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

} // namespace

WilcoxonResult wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b,
                                    Alternative alternative) {
    if (a.size() != b.size())
        throw Error(ErrorKind::InvalidInput, "paired samples differ in length");
    if (a.size() < 6) throw Error(ErrorKind::InvalidInput, "signed-rank test needs >= 6 pairs");

    std::vector<double> d;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        if (!std::isfinite(diff)) throw Error(ErrorKind::InvalidInput, "non-finite sample");
        if (diff != 0.0) d.push_back(diff);
    }
    WilcoxonResult res;
    res.n_used = d.size();
    const std::size_t n = d.size();
    if (n == 0) {
        res.exact = true;
        return res;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return std::abs(d[i]) < std::abs(d[j]); });
    // Doubled midranks keep everything integral.
    std::vector<long> rank2(n);
    double tie_term = 0.0;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j + 1 < n && std::abs(d[order[j + 1]]) == std::abs(d[order[i]])) ++j;
        const long r2 = static_cast<long>(i + 1 + j + 1);
        for (std::size_t k = i; k <= j; ++k) rank2[order[k]] = r2;
        const double t = static_cast<double>(j - i + 1);
        tie_term += t * t * t - t;
        i = j + 1;
    }
    long w2 = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (d[i] > 0) w2 += rank2[i];
    res.statistic = 0.5 * static_cast<double>(w2);

    double p_le = 0.0, p_ge = 0.0;
    if (n <= kExactLimit) {
        res.exact = true;
        const long total = std::accumulate(rank2.begin(), rank2.end(), 0L);
        std::vector<double> count(static_cast<std::size_t>(total) + 1, 0.0);
        count[0] = 1.0;
        long reach = 0;
        for (long r : rank2) {
            for (long s = reach; s >= 0; --s) count[static_cast<std::size_t>(s + r)] += count[static_cast<std::size_t>(s)];
            reach += r;
        }
        const double all = std::ldexp(1.0, static_cast<int>(n));
        for (long s = 0; s <= total; ++s) {
            if (s <= w2) p_le += count[static_cast<std::size_t>(s)];
            if (s >= w2) p_ge += count[static_cast<std::size_t>(s)];
        }
        p_le /= all;
        p_ge /= all;
    } else {
        const double nn = static_cast<double>(n);
        const double mean = nn * (nn + 1.0) / 4.0;
        const double var = nn * (nn + 1.0) * (2.0 * nn + 1.0) / 24.0 - tie_term / 48.0;
        const double sd = std::sqrt(var);
        p_le = normal_cdf((res.statistic - mean + 0.5) / sd);
        p_ge = 1.0 - normal_cdf((res.statistic - mean - 0.5) / sd);
    }
    switch (alternative) {
    case Alternative::Less: res.p_value = p_le; break;
    case Alternative::Greater: res.p_value = p_ge; break;
    case Alternative::TwoSided: res.p_value = 2.0 * std::min(p_le, p_ge); break;
    }
    res.p_value = std::clamp(res.p_value, 0.0, 1.0);
    return res;
}

} // namespace subscore::harness
