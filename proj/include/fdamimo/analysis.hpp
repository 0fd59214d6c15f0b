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

#ifndef FDAMIMO_ANALYSIS_HPP
#define FDAMIMO_ANALYSIS_HPP

#include <span>
#include <vector>

#include "fdamimo/detectors.hpp"
#include "fdamimo/numerics.hpp"

namespace fdamimo {

// Degree-of-freedom bookkeeping for the closed forms.
//
// S_+ = S + Z P Z^H pools LK training columns with the K - 1 signal-free
// directions of the cell under test, so it is complex Wishart with
// (L+1)K - 1 degrees of freedom. The `exact` convention uses that count,
// giving mm = (L+1)K - MN. The `printed` convention counts (L+1)K degrees
// of freedom instead, giving mm = (L+1)K - MN + 1; it is kept for comparison
// only and disagrees with simulation.
enum class DofConvention { exact, printed };

struct DofParams {
    int mm = 0;    // OGLRT / LHAMF / Rao loss-factor order
    int mm1 = 0;   // TGLRT: LK - MN + 1
    int mn = 0;    // MN
    int lk1 = 0;   // (L+1)K; the Rao null law has exponent lk1 - 1

    // Throws ArgumentError unless mm >= 1, mm1 >= 1 and mn >= 1.
    void validate() const;

    static DofParams from_dims(int l_cells, int k_snapshots, int mn, DofConvention conv = DofConvention::exact);
};

// Conditional CDF of the Kelly-type statistic given the loss factor:
//   P(gamma) = sum_{i=0}^{order-1} C(order, 1+i) gamma^{1+i} / (1+gamma)^order
//              * IG_{i+1}(alpha b / (1 + gamma))
// evaluated in the log domain. Returns 1 - P(gamma), the exceedance
// probability, clamped to [0, 1].
double kelly_exceedance(double gamma, double alpha_b, int order);

// OGLRT, threshold on lambda'' = Lambda - 1: PFA = (1 + lambda)^-mm.
double pfa_oglrt(double lambda, const DofParams& dof);
double threshold_oglrt(double pfa, const DofParams& dof);
double pd_oglrt(double lambda, double alpha, const DofParams& dof);

// TGLRT: PFA = int (1 + lambda B1)^-mm1 f(B1; mm1) dB1.
double pfa_tglrt(double lambda, const DofParams& dof);
double threshold_tglrt(double pfa, const DofParams& dof);
double pd_tglrt(double lambda, double alpha, const DofParams& dof);

// LHAMF: the TGLRT forms with mm in place of mm1.
double pfa_lhamf(double lambda, const DofParams& dof);
double threshold_lhamf(double pfa, const DofParams& dof);
double pd_lhamf(double lambda, double alpha, const DofParams& dof);

// Rao: PFA = (1 - lambda)^((L+1)K - 1), lambda in [0, 1).
double pfa_rao(double lambda, const DofParams& dof);
double threshold_rao(double pfa, const DofParams& dof);
double pd_rao(double lambda, double alpha, const DofParams& dof);

// Dispatch on a training-based detector kind; ArgumentError otherwise.
double closed_form_pfa(DetectorKind kind, double lambda, const DofParams& dof);
double closed_form_threshold(DetectorKind kind, double pfa, const DofParams& dof);
double closed_form_pd(DetectorKind kind, double lambda, double alpha, const DofParams& dof);

struct RocPoint {
    double pfa = 0.0;
    double threshold = 0.0;
    double alpha = 0.0;
    double pd = 0.0;
    double snr_db = 0.0;  // NaN when the point was requested by alpha
};

std::vector<RocPoint> roc_curve(DetectorKind kind, const DofParams& dof, std::span<const double> alpha_grid,
                                double pfa);

// PD versus SNR where alpha = alpha_per_unit_snr * 10^(snr_db / 10).
std::vector<RocPoint> pd_versus_snr(DetectorKind kind, const DofParams& dof, std::span<const double> snr_db_grid,
                                    double alpha_per_unit_snr, double pfa);

} // namespace fdamimo

#endif
