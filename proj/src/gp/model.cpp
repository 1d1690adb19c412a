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
#include "subscore/gp/model.hpp"

#include <cmath>

#include "subscore/error.hpp"

namespace subscore::gp {

void Dataset::append(const Point &x, double y, double noise_variance) {
    if (!x_.empty() && x.size() != x_.front().size()) {
        throw Error(ErrorKind::InvalidInput, "point dimension mismatch");
    }
    if (!(noise_variance > 0.0) || !std::isfinite(noise_variance)) {
        throw Error(ErrorKind::InvalidInput, "noise variance must be positive and finite");
    }
    if (!std::isfinite(y)) {
        throw Error(ErrorKind::InvalidInput, "observation must be finite");
    }
    x_.push_back(wrap_point(x));
    y_.push_back(y);
    sigma_.push_back(noise_variance);
}

Dataset Dataset::slice(std::size_t first, std::size_t last) const {
    Dataset out;
    for (std::size_t i = first; i < last && i < size(); ++i) {
        out.x_.push_back(x_[i]);
        out.y_.push_back(y_[i]);
        out.sigma_.push_back(sigma_[i]);
    }
    return out;
}

double factor_with_jitter(const Eigen::MatrixXd &system, double sigma0_2,
                          Eigen::LLT<Eigen::MatrixXd> &llt) {
    llt.compute(system);
    if (llt.info() == Eigen::Success) {
        return 0.0;
    }
    const Eigen::Index n = system.rows();
    for (double jitter = 1e-10 * sigma0_2; jitter <= 1e-6 * sigma0_2 * (1.0 + 1e-9);
         jitter *= 10.0) {
        llt.compute(system + jitter * Eigen::MatrixXd::Identity(n, n));
        if (llt.info() == Eigen::Success) {
            return jitter;
        }
    }
    throw Error(ErrorKind::NumericalFailure,
                "kernel system not positive definite after jitter escalation");
}

GPModel::GPModel(Dataset data, KernelParams params)
    : data_(std::move(data)), params_(std::move(params)) {
    params_.validate();
    if (!data_.empty() &&
        static_cast<std::size_t>(data_.points().front().size()) != params_.dim()) {
        throw Error(ErrorKind::InvalidInput, "data dimension does not match kernel");
    }
    const auto n = static_cast<Eigen::Index>(data_.size());
    if (n == 0) {
        alpha_.resize(0);
        return;
    }
    Eigen::MatrixXd system = kernel_matrix(data_.points(), data_.points(), params_);
    for (Eigen::Index i = 0; i < n; ++i) {
        system(i, i) += data_.noise()[static_cast<std::size_t>(i)];
    }
    jitter_ = factor_with_jitter(system, params_.sigma0_2, llt_);
    const Eigen::VectorXd centered =
        Eigen::Map<const Eigen::VectorXd>(data_.values().data(), n).array() - params_.prior_mean;
    alpha_ = llt_.solve(centered);
}

Posterior GPModel::posterior(const std::vector<Point> &test) const {
    Eigen::MatrixXd kss = kernel_matrix(test, test, params_);
    if (data_.empty()) {
        return {Eigen::VectorXd::Constant(static_cast<Eigen::Index>(test.size()), params_.prior_mean),
                std::move(kss)};
    }
    const Eigen::MatrixXd ks = kernel_matrix(data_.points(), test, params_);
    const Eigen::MatrixXd v = llt_.matrixL().solve(ks);
    Posterior out{(ks.transpose() * alpha_).array() + params_.prior_mean, kss - v.transpose() * v};
    out.cov = 0.5 * (out.cov + out.cov.transpose());
    return out;
}

Eigen::VectorXd GPModel::means(const std::vector<Point> &test) const {
    if (data_.empty()) {
        return Eigen::VectorXd::Constant(static_cast<Eigen::Index>(test.size()),
                                         params_.prior_mean);
    }
    return (kernel_matrix(data_.points(), test, params_).transpose() * alpha_).array() +
           params_.prior_mean;
}

Eigen::VectorXd GPModel::variances(const std::vector<Point> &test) const {
    const auto m = static_cast<Eigen::Index>(test.size());
    Eigen::VectorXd out = Eigen::VectorXd::Constant(m, params_.sigma0_2);
    if (data_.empty()) {
        return out;
    }
    const Eigen::MatrixXd ks = kernel_matrix(data_.points(), test, params_);
    const Eigen::MatrixXd v = llt_.matrixL().solve(ks);
    out -= v.colwise().squaredNorm().transpose();
    return out.cwiseMax(0.0);
}

double GPModel::mean(const Point &x) const { return means({x})[0]; }

double GPModel::variance(const Point &x) const { return variances({x})[0]; }

Eigen::MatrixXd GPModel::system_inverse() const {
    const auto n = static_cast<Eigen::Index>(data_.size());
    return llt_.solve(Eigen::MatrixXd::Identity(n, n));
}

} // namespace subscore::gp
