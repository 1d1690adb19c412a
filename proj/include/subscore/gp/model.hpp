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
#include <vector>

#include <Eigen/Dense>

#include "subscore/gp/kernel.hpp"

namespace subscore::gp {

/// Training triple (X, y, sigma); sigma holds noise variances.
class Dataset {
  public:
    Dataset() = default;

    /// Wraps `x` into [0, 2 pi)^D; throws invalid-input on non-positive or
    /// non-finite variance, or on a dimension mismatch.
    void append(const Point &x, double y, double noise_variance);

    [[nodiscard]] std::size_t size() const noexcept { return y_.size(); }
    [[nodiscard]] bool empty() const noexcept { return y_.empty(); }
    [[nodiscard]] const std::vector<Point> &points() const noexcept { return x_; }
    [[nodiscard]] const std::vector<double> &values() const noexcept { return y_; }
    [[nodiscard]] const std::vector<double> &noise() const noexcept { return sigma_; }

    /// Elements [first, last).
    [[nodiscard]] Dataset slice(std::size_t first, std::size_t last) const;

    friend bool operator==(const Dataset &, const Dataset &) = default;

  private:
    std::vector<Point> x_;
    std::vector<double> y_;
    std::vector<double> sigma_;
};

struct Posterior {
    Eigen::VectorXd mean;
    Eigen::MatrixXd cov;
};

/// GP regression with the VQE kernel and per-point noise. Immutable: the
/// Cholesky factor of K + Diag(sigma) is computed once on construction.
///
/// If the plain factorization fails, 1e-10 sigma0^2 is added to the diagonal
/// and escalated by 10x up to 1e-6 sigma0^2 before giving up with
/// numerical-failure.
class GPModel {
  public:
    GPModel(Dataset data, KernelParams params);

    [[nodiscard]] const Dataset &data() const noexcept { return data_; }
    [[nodiscard]] const KernelParams &params() const noexcept { return params_; }
    [[nodiscard]] double jitter() const noexcept { return jitter_; }

    [[nodiscard]] Posterior posterior(const std::vector<Point> &test) const;
    [[nodiscard]] Eigen::VectorXd means(const std::vector<Point> &test) const;
    [[nodiscard]] Eigen::VectorXd variances(const std::vector<Point> &test) const;
    [[nodiscard]] double mean(const Point &x) const;
    [[nodiscard]] double variance(const Point &x) const;

    /// (K + Diag(sigma))^{-1} (y - prior_mean)
    [[nodiscard]] const Eigen::VectorXd &weights() const noexcept { return alpha_; }
    /// (K + Diag(sigma))^{-1}, formed on demand.
    [[nodiscard]] Eigen::MatrixXd system_inverse() const;

  private:
    Dataset data_;
    KernelParams params_;
    Eigen::LLT<Eigen::MatrixXd> llt_;
    Eigen::VectorXd alpha_;
    double jitter_ = 0.0;
};

/// Factors `system` in place with the jitter policy above; returns the
/// jitter that was needed.
double factor_with_jitter(const Eigen::MatrixXd &system, double sigma0_2,
                          Eigen::LLT<Eigen::MatrixXd> &llt);

} // namespace subscore::gp
