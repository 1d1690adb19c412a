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
#include "subscore/gp/loo.hpp"

#include <cmath>
#include <limits>

#include "subscore/error.hpp"

namespace subscore::gp {

namespace {

double nlpd_from_system(const Eigen::MatrixXd &system, const Eigen::VectorXd &y,
                        double sigma0_2) {
    Eigen::LLT<Eigen::MatrixXd> llt;
    factor_with_jitter(system, sigma0_2, llt);
    const Eigen::Index n = system.rows();
    // diag(A) from the column norms of L^{-1}; A y from one more solve.
    Eigen::MatrixXd linv = Eigen::MatrixXd::Identity(n, n);
    llt.matrixL().solveInPlace(linv);
    const Eigen::VectorXd diag = linv.colwise().squaredNorm().transpose();
    const Eigen::VectorXd a = llt.solve(y);
    double total = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double aii = diag[i];
        if (!(aii > 0.0)) {
            return std::numeric_limits<double>::infinity();
        }
        const double var = 1.0 / aii;
        const double resid = a[i] / aii;
        total += 0.5 * std::log(2.0 * std::numbers::pi * var) + 0.5 * resid * resid / var;
    }
    return total;
}

} // namespace

std::vector<double> gamma_grid(const GammaSearch &search) {
    if (search.steps < 2 || !(search.gamma_min > 0.0) || !(search.gamma_max > search.gamma_min)) {
        throw Error(ErrorKind::InvalidConfig, "bad gamma grid");
    }
    std::vector<double> g(static_cast<std::size_t>(search.steps));
    const double lo = std::log(search.gamma_min);
    const double hi = std::log(search.gamma_max);
    for (int k = 0; k < search.steps; ++k) {
        g[static_cast<std::size_t>(k)] = std::exp(lo + (hi - lo) * k / (search.steps - 1));
    }
    g.front() = search.gamma_min;
    g.back() = search.gamma_max;
    return g;
}

double loo_nlpd(const Dataset &data, const KernelParams &params) {
    const auto n = static_cast<Eigen::Index>(data.size());
    Eigen::MatrixXd system = kernel_matrix(data.points(), data.points(), params);
    for (Eigen::Index i = 0; i < n; ++i) {
        system(i, i) += data.noise()[static_cast<std::size_t>(i)];
    }
    const Eigen::VectorXd y =
        Eigen::Map<const Eigen::VectorXd>(data.values().data(), n).array() - params.prior_mean;
    return nlpd_from_system(system, y, params.sigma0_2);
}

double loo_gamma_search(const Dataset &data, const KernelParams &params,
                        const GammaSearch &search) {
    if (data.size() < 3) {
        return params.gamma2;
    }
    const auto n = static_cast<Eigen::Index>(data.size());
    const std::size_t dim = params.dim();
    const auto &pts = data.points();

    // Per-pair, per-axis cos sums are gamma independent; only the products
    // change across the grid.
    const std::size_t pairs = static_cast<std::size_t>(n * (n - 1) / 2);
    std::vector<double> sums(pairs * dim);
    std::size_t idx = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j, ++idx) {
            for (std::size_t d = 0; d < dim; ++d) {
                const auto e = static_cast<Eigen::Index>(d);
                sums[idx * dim + d] = cos_sum(pts[i][e] - pts[j][e], params.vd[d]);
            }
        }
    }
    const Eigen::VectorXd y =
        Eigen::Map<const Eigen::VectorXd>(data.values().data(), n).array() - params.prior_mean;

    const auto grid = gamma_grid(search);
    double best_loss = std::numeric_limits<double>::infinity();
    double best_gamma2 = params.gamma2;
    Eigen::MatrixXd system(n, n);
    std::vector<double> inv_norm(dim);
    for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
        const double g2 = (*it) * (*it);
        for (std::size_t d = 0; d < dim; ++d) {
            inv_norm[d] = 1.0 / (g2 + 2.0 * params.vd[d]);
        }
        idx = 0;
        for (Eigen::Index i = 0; i < n; ++i) {
            system(i, i) = params.sigma0_2 + data.noise()[static_cast<std::size_t>(i)];
            for (Eigen::Index j = i + 1; j < n; ++j, ++idx) {
                double k = params.sigma0_2;
                const double *s = &sums[idx * dim];
                for (std::size_t d = 0; d < dim; ++d) {
                    k *= (g2 + 2.0 * s[d]) * inv_norm[d];
                }
                system(i, j) = k;
                system(j, i) = k;
            }
        }
        double loss = std::numeric_limits<double>::infinity();
        try {
            loss = nlpd_from_system(system, y, params.sigma0_2);
        } catch (const Error &) {
            continue;
        }
        if (loss < best_loss) {
            best_loss = loss;
            best_gamma2 = g2;
        }
    }
    return best_gamma2;
}

} // namespace subscore::gp
