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

#ifndef FDAMIMO_DETECTORS_HPP
#define FDAMIMO_DETECTORS_HPP

#include <array>
#include <optional>
#include <string_view>

#include "fdamimo/scenario.hpp"

namespace fdamimo {

enum class DetectorKind { oglrt, tglrt, rao, lhamf, glrt_no, rao_no, wald_no };

inline constexpr std::array<DetectorKind, 7> kAllDetectors{DetectorKind::oglrt,   DetectorKind::tglrt,
                                                          DetectorKind::rao,     DetectorKind::lhamf,
                                                          DetectorKind::glrt_no, DetectorKind::rao_no,
                                                          DetectorKind::wald_no};
inline constexpr std::array<DetectorKind, 4> kTrainingDetectors{DetectorKind::oglrt, DetectorKind::tglrt,
                                                               DetectorKind::rao, DetectorKind::lhamf};

std::string_view to_string(DetectorKind kind);
// Accepts the canonical names ("OGLRT", "GLRT-no", ...) case-insensitively,
// with '_' and '-' interchangeable. Throws ArgumentError otherwise.
DetectorKind parse_detector(std::string_view name);
bool uses_training(DetectorKind kind);

// Training-based statistics share these inputs: z is the MN x K cell under
// test, s the training SCM, a the nominal joint steering vector and omega the
// nominal Doppler vector. Every statistic is evaluated through Hermitian
// solves against S, S_+ = S + Z P Z^H or S + Z Z^H.

// One-step GLRT, ratio of a^H S_+^{-1} a over a^H (S + Z Z^H)^{-1} a. >= 1.
double oglrt(const CMatrix& z, const CMatrix& s, const CVector& a, const CVector& omega);

// Two-step GLRT: |a^H S^-1 z_w|^2 / (a^H S^-1 a) with z_w = Z w* / ||w||.
double tglrt(const CMatrix& z, const CMatrix& s, const CVector& a, const CVector& omega);

// Rao score test, evaluated with (Z Z^H + S)^{-1}. In [0, 1).
double rao(const CMatrix& z, const CMatrix& s, const CVector& a, const CVector& omega);

// AMF form whitened by S_+: |a^H S_+^-1 z_w|^2 / (a^H S_+^-1 a).
double lhamf(const CMatrix& z, const CMatrix& s, const CVector& a, const CVector& omega);

// All training-based statistics of one trial together with the terms that
// relate them:
//   oglrt = 1 / (1 - lambda_prime)
//   lambda_dprime = lambda_prime / (1 - lambda_prime) = oglrt - 1
//   loss_b = lambda_dprime / lhamf
//   rao = lambda_prime * lambda_dprime / lhamf = loss_b * lambda_dprime / (1 + lambda_dprime)
// oglrt, rao, tglrt and lhamf are each computed by their own formula; the
// identities above are not used to derive them.
struct DetectionOutcome {
    double oglrt = 1.0;
    double tglrt = 0.0;
    double rao = 0.0;
    double lhamf = 0.0;
    double lambda_prime = 0.0;
    double lambda_dprime = 0.0;
    double loss_b = 1.0;
};

// Throws NumericError when lambda_prime >= 1 numerically.
DetectionOutcome decomposition(const CMatrix& z, const CMatrix& s, const CVector& a, const CVector& omega);

// Interpretation of the printed GLRT-no denominator, whose data matrix carries
// a whitening tilde. `plain` uses Z as is. `whitened` whitens Z by
// (Z P Z^H)^{-1/2} before forming the denominator Gram matrix.
enum class GlrtNoForm { plain, whitened };

// Training-free comparators; all need K > MN so that Z P Z^H and Z Z^H are
// invertible (ArgumentError otherwise, including singular Gram matrices).
double glrt_no(const CMatrix& z, const CVector& a, const CVector& omega, GlrtNoForm form = GlrtNoForm::plain);
double rao_no(const CMatrix& z, const CVector& a, const CVector& omega);
double wald_no(const CMatrix& z, const CVector& a, const CVector& omega);

// alpha = |xi|^2 (w^T w*) (a^H R^-1 a).
double noncentrality_alpha(cd xi, const CVector& omega, const CVector& a, const CMatrix& r);

// w^T w*, returned as exactly K when every entry has unit modulus.
double doppler_energy(const CVector& omega);

// Statistic that analysis thresholds refer to. For OGLRT this is
// lambda_dprime (= oglrt - 1); the others are the statistics themselves.
double decision_statistic(DetectorKind kind, const DetectionOutcome& outcome);

} // namespace fdamimo

#endif
