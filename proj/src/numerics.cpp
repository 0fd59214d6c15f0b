// SPDX-License-Identifier: Apache-2.0
//
// fdamimo: adaptive target detection for FDA-MIMO radar with training data.
// Copyright (C) 2026 The fdamimo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "fdamimo/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace fdamimo {

CMatrix sample_covariance(std::span<const CMatrix> training)
{
    if (training.empty()) throw ArgumentError("sample_covariance: no training data");
    const Eigen::Index dim = training.front().rows();
    Eigen::Index columns = 0;
    CMatrix s = CMatrix::Zero(dim, dim);
    for (const CMatrix& z : training) {
        if (z.rows() != dim) throw ArgumentError("sample_covariance: training matrices differ in row count");
        s.noalias() += z * z.adjoint();
        columns += z.cols();
    }
    if (columns <= dim) {
        throw ArgumentError("sample_covariance: need L*K > MN training columns (have " + std::to_string(columns) +
                            " for dimension " + std::to_string(dim) + ")");
    }
    if (!(condition_number(s) <= 1e14)) throw NumericError("sample_covariance: sample covariance is singular");
    return s;
}

CMatrix accumulate_gram(std::span<const CMatrix> training)
{
    if (training.empty()) throw ArgumentError("accumulate_gram: no training data");
    const Eigen::Index dim = training.front().rows();
    CMatrix s = CMatrix::Zero(dim, dim);
    for (const CMatrix& z : training) s.selfadjointView<Eigen::Lower>().rankUpdate(z);
    return s.selfadjointView<Eigen::Lower>();
}

Eigen::LLT<CMatrix> hermitian_factor(const CMatrix& s, const char* what)
{
    Eigen::LLT<CMatrix> llt(s);
    if (llt.info() != Eigen::Success) throw NumericError(std::string(what) + ": matrix is not positive definite");
    // LLT only checks pivots > 0; catch pivots that are numerically zero.
    const auto d = llt.matrixLLT().diagonal().real();
    if (!(d.minCoeff() > 1e-7 * d.maxCoeff())) {
        throw NumericError(std::string(what) + ": matrix is numerically singular");
    }
    return llt;
}

CMatrix whiten_factor(const CMatrix& s)
{
    const auto llt = hermitian_factor(s, "whiten_factor");
    CMatrix w = CMatrix::Identity(s.rows(), s.cols());
    llt.matrixL().solveInPlace(w);
    return w;
}

bool is_hermitian(const CMatrix& m, double rel_tol)
{
    if (m.rows() != m.cols()) return false;
    const double scale = std::max(m.norm(), std::numeric_limits<double>::min());
    return (m - m.adjoint()).norm() <= rel_tol * scale;
}

double condition_number(const CMatrix& s)
{
    Eigen::SelfAdjointEigenSolver<CMatrix> es(s, Eigen::EigenvaluesOnly);
    const auto ev = es.eigenvalues();
    if (!(ev.minCoeff() > 0.0)) return std::numeric_limits<double>::infinity();
    return ev.maxCoeff() / ev.minCoeff();
}

double log_add_exp(double a, double b)
{
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    const double hi = std::max(a, b);
    return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

double log_incomplete_gamma(int iota, double h)
{
    if (iota < 0) throw ArgumentError("incomplete_gamma: order must be >= 0");
    if (!(h >= 0.0)) throw ArgumentError("incomplete_gamma: argument must be >= 0");
    if (h == 0.0) return 0.0;
    if (h <= 50.0) return std::log(incomplete_gamma(iota, h));
    const double log_h = std::log(h);
    double acc = -std::numeric_limits<double>::infinity();
    for (int j = 0; j <= iota; ++j) {
        acc = log_add_exp(acc, j * log_h - std::lgamma(j + 1.0));
    }
    return std::min(0.0, acc - h);
}

double incomplete_gamma(int iota, double h)
{
    if (iota < 0) throw ArgumentError("incomplete_gamma: order must be >= 0");
    if (!(h >= 0.0)) throw ArgumentError("incomplete_gamma: argument must be >= 0");
    if (h > 50.0) return std::exp(log_incomplete_gamma(iota, h));
    double term = 1.0;
    double sum = 1.0;
    for (int j = 1; j <= iota; ++j) {
        term *= h / j;
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return std::min(1.0, std::exp(-h) * sum);
}

double log_binomial(int n, int k)
{
    if (n < 0 || k < 0 || k > n) {
        throw ArgumentError("log_binomial: need 0 <= k <= n (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
    }
    if (k == 0 || k == n) return 0.0;
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double log_loss_factor_pdf(double b, int mm, int mn)
{
    if (mm < 0) throw ArgumentError("loss_factor_pdf: mm must be >= 0");
    if (mn < 2) throw ArgumentError("loss_factor_pdf: mn < 2 is a point mass at B = 1");
    if (b < 0.0 || b > 1.0) return -std::numeric_limits<double>::infinity();
    const double log_beta = std::lgamma(mm + 1.0) + std::lgamma(mn - 1.0) - std::lgamma(mm + mn + 0.0);
    const double lb = (mm == 0) ? 0.0 : mm * std::log(b);
    const double l1b = (mn == 2) ? 0.0 : (mn - 2) * std::log1p(-b);
    return lb + l1b - log_beta;
}

double loss_factor_pdf(double b, int mm, int mn) { return std::exp(log_loss_factor_pdf(b, mm, mn)); }

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights)
{
    if (n < 1) throw ArgumentError("gauss_legendre: need at least one node");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0;
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        // Recompute the derivative at the converged root.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        if (n == 1) p0 = 1.0;
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
}

double integrate_unit_interval(const std::function<double(double)>& f, QuadratureOptions opts, double lo, double hi)
{
    if (!(hi >= lo)) throw ArgumentError("integrate_unit_interval: need lo <= hi");
    if (hi == lo) return 0.0;
    const double mid = 0.5 * (hi + lo);
    const double half = 0.5 * (hi - lo);
    std::vector<double> x;
    std::vector<double> w;
    auto estimate = [&](int n) {
        gauss_legendre(n, x, w);
        double acc = 0.0;
        for (int i = 0; i < n; ++i) acc += w[i] * f(mid + half * x[i]);
        return acc * half;
    };
    int n = std::max(1, opts.min_nodes);
    double prev = estimate(n);
    while (2 * n <= opts.max_nodes) {
        n *= 2;
        const double cur = estimate(n);
        if (std::abs(cur - prev) < opts.tol) return cur;
        prev = cur;
    }
    throw NumericError("integrate_unit_interval: no convergence with " + std::to_string(opts.max_nodes) + " nodes");
}

} // namespace fdamimo
