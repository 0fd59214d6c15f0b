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

#include "fdamimo/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace fdamimo {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

const QuadratureOptions kPfaQuad{1e-12, 16, 1 << 14};
const QuadratureOptions kPdQuad{1e-9, 16, 1 << 14};

void check_pfa(double pfa, const char* who)
{
    if (!(pfa > 0.0 && pfa < 1.0)) throw ArgumentError(std::string(who) + ": pfa must lie in (0, 1)");
}

void check_lambda(double lambda, const char* who)
{
    if (!(lambda >= 0.0)) throw ArgumentError(std::string(who) + ": threshold must be >= 0");
}

void check_alpha(double alpha, const char* who)
{
    if (!(alpha >= 0.0)) throw ArgumentError(std::string(who) + ": alpha must be >= 0");
}

// E_B[g(B)] over the loss factor with the given order; B == 1 when mn == 1.
template <class F>
double loss_average(F&& g, int order, int mn, QuadratureOptions opts, double lo = 0.0)
{
    if (mn == 1) return g(1.0);
    return integrate_unit_interval([&](double b) { return g(b) * loss_factor_pdf(b, order, mn); }, opts, lo, 1.0);
}

// PFA(lambda) = E[(1 + lambda B)^-order], strictly decreasing in lambda.
double amf_pfa(double lambda, int order, int mn)
{
    if (lambda == 0.0) return 1.0;
    return loss_average([&](double b) { return std::pow(1.0 + lambda * b, -order); }, order, mn, kPfaQuad);
}

double amf_pd(double lambda, double alpha, int order, int mn)
{
    return loss_average([&](double b) { return kelly_exceedance(lambda * b, alpha * b, order); }, order, mn,
                        kPdQuad);
}

double invert_decreasing(double pfa, int order, int mn)
{
    double lo = 0.0;
    double hi = 1.0;
    while (amf_pfa(hi, order, mn) > pfa) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e12) throw NumericError("threshold inversion: no bracket for pfa " + std::to_string(pfa));
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (amf_pfa(mid, order, mn) > pfa ? lo : hi) = mid;
        if (hi - lo <= 1e-13 * hi) break;
    }
    return 0.5 * (lo + hi);
}

} // namespace

void DofParams::validate() const
{
    if (mn < 1) throw ArgumentError("DofParams: MN must be >= 1");
    if (mm < 1) throw ArgumentError("DofParams: mm = " + std::to_string(mm) + " must be >= 1");
    if (mm1 < 1) throw ArgumentError("DofParams: mm1 = LK - MN + 1 must be >= 1");
    if (lk1 < 2) throw ArgumentError("DofParams: (L+1)K must be >= 2");
}

DofParams DofParams::from_dims(int l_cells, int k_snapshots, int mn, DofConvention conv)
{
    DofParams d;
    d.mn = mn;
    d.lk1 = (l_cells + 1) * k_snapshots;
    d.mm = d.lk1 - mn + (conv == DofConvention::printed ? 1 : 0);
    d.mm1 = l_cells * k_snapshots - mn + 1;
    d.validate();
    return d;
}

double kelly_exceedance(double gamma, double alpha_b, int order)
{
    if (order < 1) throw ArgumentError("kelly_exceedance: order must be >= 1");
    if (!(gamma >= 0.0)) throw ArgumentError("kelly_exceedance: gamma must be >= 0");
    if (!(alpha_b >= 0.0)) throw ArgumentError("kelly_exceedance: alpha must be >= 0");
    if (gamma == 0.0) return 1.0;
    if (std::isinf(gamma)) return 0.0;

    // Since sum_i C(order, 1+i) x^(1+i) (1-x)^(order-1-i) = 1 - (1-x)^order with
    // x = gamma / (1 + gamma), the exceedance is
    //   (1-x)^order + sum_i C(order, 1+i) x^(1+i) (1-x)^(order-1-i) (1 - IG_{i+1}(h)),
    // a sum of positive terms. 1 - IG_{i+1}(h) = P(Poisson(h) > i).
    const double log_x = std::log(gamma) - std::log1p(gamma);
    const double log_1x = -std::log1p(gamma);
    const double h = alpha_b / (1.0 + gamma);
    double log_total = order * log_1x;
    if (h == 0.0) return std::clamp(std::exp(log_total), 0.0, 1.0);

    const double log_h = std::log(h);
    auto log_pmf = [&](int j) { return -h + j * log_h - std::lgamma(j + 1.0); };

    // Upper tail P(X > order - 1), then P(X > i) = P(X > i + 1) + pmf(i + 1).
    double log_cdf = kNegInf;
    for (int j = 0; j < order; ++j) log_cdf = log_add_exp(log_cdf, log_pmf(j));
    double log_tail;
    if (log_cdf < std::log(0.5)) {
        log_tail = std::log1p(-std::exp(log_cdf));
    } else {
        log_tail = kNegInf;
        for (int j = order;; ++j) {
            const double t = log_pmf(j);
            log_tail = log_add_exp(log_tail, t);
            if (j > h && t < log_tail - 40.0) break;
        }
    }
    for (int i = order - 1; i >= 0; --i) {
        if (i < order - 1) log_tail = log_add_exp(log_tail, log_pmf(i + 1));
        const double t = log_binomial(order, i + 1) + (i + 1) * log_x + (order - 1 - i) * log_1x + log_tail;
        log_total = log_add_exp(log_total, t);
    }
    return std::clamp(std::exp(log_total), 0.0, 1.0);
}

double pfa_oglrt(double lambda, const DofParams& dof)
{
    check_lambda(lambda, "pfa_oglrt");
    return std::pow(1.0 + lambda, -dof.mm);
}

double threshold_oglrt(double pfa, const DofParams& dof)
{
    check_pfa(pfa, "threshold_oglrt");
    return std::pow(pfa, -1.0 / dof.mm) - 1.0;
}

double pd_oglrt(double lambda, double alpha, const DofParams& dof)
{
    check_lambda(lambda, "pd_oglrt");
    check_alpha(alpha, "pd_oglrt");
    return loss_average([&](double b) { return kelly_exceedance(lambda, alpha * b, dof.mm); }, dof.mm, dof.mn,
                        kPdQuad);
}

double pfa_tglrt(double lambda, const DofParams& dof)
{
    check_lambda(lambda, "pfa_tglrt");
    return amf_pfa(lambda, dof.mm1, dof.mn);
}

double threshold_tglrt(double pfa, const DofParams& dof)
{
    check_pfa(pfa, "threshold_tglrt");
    return invert_decreasing(pfa, dof.mm1, dof.mn);
}

double pd_tglrt(double lambda, double alpha, const DofParams& dof)
{
    check_lambda(lambda, "pd_tglrt");
    check_alpha(alpha, "pd_tglrt");
    return amf_pd(lambda, alpha, dof.mm1, dof.mn);
}

double pfa_lhamf(double lambda, const DofParams& dof)
{
    check_lambda(lambda, "pfa_lhamf");
    return amf_pfa(lambda, dof.mm, dof.mn);
}

double threshold_lhamf(double pfa, const DofParams& dof)
{
    check_pfa(pfa, "threshold_lhamf");
    return invert_decreasing(pfa, dof.mm, dof.mn);
}

double pd_lhamf(double lambda, double alpha, const DofParams& dof)
{
    check_lambda(lambda, "pd_lhamf");
    check_alpha(alpha, "pd_lhamf");
    return amf_pd(lambda, alpha, dof.mm, dof.mn);
}

double pfa_rao(double lambda, const DofParams& dof)
{
    if (!(lambda >= 0.0 && lambda < 1.0)) throw ArgumentError("pfa_rao: threshold must lie in [0, 1)");
    return std::pow(1.0 - lambda, dof.lk1 - 1);
}

double threshold_rao(double pfa, const DofParams& dof)
{
    check_pfa(pfa, "threshold_rao");
    return 1.0 - std::pow(pfa, 1.0 / (dof.lk1 - 1));
}

double pd_rao(double lambda, double alpha, const DofParams& dof)
{
    if (!(lambda >= 0.0 && lambda < 1.0)) throw ArgumentError("pd_rao: threshold must lie in [0, 1)");
    check_alpha(alpha, "pd_rao");
    // Rao > lambda  <=>  lambda'' > lambda / (B - lambda) with B > lambda.
    // The integrand vanishes as B -> lambda+, and Gauss nodes never touch it.
    auto g = [&](double b) {
        if (b <= lambda) return 0.0;
        return kelly_exceedance(lambda / (b - lambda), alpha * b, dof.mm);
    };
    return loss_average(g, dof.mm, dof.mn, kPdQuad, lambda);
}

double closed_form_pfa(DetectorKind kind, double lambda, const DofParams& dof)
{
    switch (kind) {
    case DetectorKind::oglrt: return pfa_oglrt(lambda, dof);
    case DetectorKind::tglrt: return pfa_tglrt(lambda, dof);
    case DetectorKind::lhamf: return pfa_lhamf(lambda, dof);
    case DetectorKind::rao: return pfa_rao(lambda, dof);
    default: break;
    }
    throw ArgumentError("no closed-form PFA for " + std::string(to_string(kind)));
}

double closed_form_threshold(DetectorKind kind, double pfa, const DofParams& dof)
{
    switch (kind) {
    case DetectorKind::oglrt: return threshold_oglrt(pfa, dof);
    case DetectorKind::tglrt: return threshold_tglrt(pfa, dof);
    case DetectorKind::lhamf: return threshold_lhamf(pfa, dof);
    case DetectorKind::rao: return threshold_rao(pfa, dof);
    default: break;
    }
    throw ArgumentError("no closed-form threshold for " + std::string(to_string(kind)));
}

double closed_form_pd(DetectorKind kind, double lambda, double alpha, const DofParams& dof)
{
    switch (kind) {
    case DetectorKind::oglrt: return pd_oglrt(lambda, alpha, dof);
    case DetectorKind::tglrt: return pd_tglrt(lambda, alpha, dof);
    case DetectorKind::lhamf: return pd_lhamf(lambda, alpha, dof);
    case DetectorKind::rao: return pd_rao(lambda, alpha, dof);
    default: break;
    }
    throw ArgumentError("no closed-form PD for " + std::string(to_string(kind)));
}

std::vector<RocPoint> roc_curve(DetectorKind kind, const DofParams& dof, std::span<const double> alpha_grid,
                                double pfa)
{
    const double lambda = closed_form_threshold(kind, pfa, dof);
    std::vector<RocPoint> out;
    out.reserve(alpha_grid.size());
    for (const double alpha : alpha_grid) {
        out.push_back({pfa, lambda, alpha, closed_form_pd(kind, lambda, alpha, dof),
                       std::numeric_limits<double>::quiet_NaN()});
    }
    return out;
}

std::vector<RocPoint> pd_versus_snr(DetectorKind kind, const DofParams& dof, std::span<const double> snr_db_grid,
                                    double alpha_per_unit_snr, double pfa)
{
    const double lambda = closed_form_threshold(kind, pfa, dof);
    std::vector<RocPoint> out;
    out.reserve(snr_db_grid.size());
    for (const double snr : snr_db_grid) {
        const double alpha = alpha_per_unit_snr * std::pow(10.0, snr / 10.0);
        out.push_back({pfa, lambda, alpha, closed_form_pd(kind, lambda, alpha, dof), snr});
    }
    return out;
}

} // namespace fdamimo
