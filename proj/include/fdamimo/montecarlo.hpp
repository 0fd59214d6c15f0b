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

#ifndef FDAMIMO_MONTECARLO_HPP
#define FDAMIMO_MONTECARLO_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fdamimo/analysis.hpp"
#include "fdamimo/detectors.hpp"
#include "fdamimo/scenario.hpp"

namespace fdamimo {

// Environment variable consulted when workers == 0 ("auto").
inline constexpr const char* kWorkersEnv = "FDAMIMO_WORKERS";

struct McConfig {
    double pfa = 1e-3;
    std::size_t trials_threshold = 0;  // 0 means ceil(100 / pfa)
    std::size_t trials_pd = 10000;
    std::uint64_t seed = 1;
    unsigned workers = 0;              // 0 means auto

    std::size_t threshold_trials() const;
    // Requires counts >= 1, pfa in (0, 1) and threshold_trials() * pfa >= 10.
    void validate() const;
};

unsigned resolve_workers(unsigned requested);

// Binomial proportion with a Wilson score interval.
struct Proportion {
    double estimate = 0.0;
    double ci_low = 0.0;
    double ci_high = 1.0;
    std::size_t successes = 0;
    std::size_t trials = 0;
};

inline constexpr double kZ95 = 1.959963984540054;
inline constexpr double kZ99 = 2.5758293035489004;

Proportion wilson_interval(std::size_t successes, std::size_t trials, double z = kZ95);

// Empirical (1 - pfa)-quantile: the ceil(n pfa)-th largest statistic, so that
// the strict decision "statistic > threshold" fires on ceil(n pfa) - 1 trials.
// [lo, hi] are the order statistics at ranks ceil(n pfa) -/+ z_se sqrt(n pfa (1 - pfa)),
// a distribution-free z_se standard-error band for the quantile.
struct QuantileEstimate {
    double value = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    std::size_t rank = 0;
    std::size_t trials = 0;
};

QuantileEstimate empirical_threshold(std::vector<double> statistics, double pfa, double z_se = 3.0);

// One batch of independent trials. Every trial draws fresh test and training
// data from trial_stream(seed, experiment, index) and evaluates all requested
// detectors on it with the nominal vectors. Output is [detector][trial].
struct TrialBatch {
    const SignalModel* model = nullptr;
    CVector nominal_steering;
    CVector nominal_doppler;
    Amplitude xi;
    Hypothesis hypothesis = Hypothesis::h0;
    std::vector<DetectorKind> detectors;
    GlrtNoForm glrt_no_form = GlrtNoForm::plain;
    std::uint64_t seed = 1;
    std::uint64_t experiment = 0;
    std::size_t trials = 0;
    unsigned workers = 0;
};

std::vector<std::vector<double>> run_trials(const TrialBatch& batch);

// Statistic compared against thresholds for any detector (see decision_statistic).
double trial_statistic(DetectorKind kind, const DataSet& ds, const CMatrix& s, const DetectionOutcome* outcome,
                       const CVector& a, const CVector& omega, GlrtNoForm form);

// ---------------------------------------------------------------------------
// Single-detector operations
// ---------------------------------------------------------------------------

QuantileEstimate estimate_threshold(DetectorKind detector, const Scenario& sc, const McConfig& mc);

Proportion estimate_pd(DetectorKind detector, double threshold, const Scenario& sc, double snr_db,
                       const McConfig& mc);

// ---------------------------------------------------------------------------
// Curves
// ---------------------------------------------------------------------------

enum class ThresholdSource { monte_carlo, closed_form };

struct SweepOptions {
    std::vector<DetectorKind> detectors{kTrainingDetectors.begin(), kTrainingDetectors.end()};
    ThresholdSource thresholds = ThresholdSource::monte_carlo;
    bool closed_form = true;
    DofConvention dof = DofConvention::exact;
    GlrtNoForm glrt_no_form = GlrtNoForm::plain;
};

struct CurvePoint {
    double x = 0.0;
    double threshold = 0.0;
    Proportion mc;
    std::optional<double> closed_form;
    std::optional<double> threshold_lo;   // quantile band, threshold curves only
    std::optional<double> threshold_hi;
};

struct Curve {
    DetectorKind detector = DetectorKind::oglrt;
    std::string label;
    std::vector<CurvePoint> points;
};

struct CurveSet {
    std::string x_kind;
    std::vector<Curve> curves;

    const Curve& find(const std::string& label) const;
};

// MC threshold versus PFA from one H0 run of ceil(100 / min pfa)
// trials (or mc.trials_threshold), with the closed-form threshold overlay.
CurveSet threshold_curves(const Scenario& sc, std::span<const double> pfa_grid, const McConfig& mc,
                          const SweepOptions& opts);

// PD versus SNR (dB) at mc.pfa, matched signal.
CurveSet pd_curves(const Scenario& sc, std::span<const double> snr_grid, const McConfig& mc,
                   const SweepOptions& opts);

// Data carry a steering vector with generalized cosine squared cos2_spatial
// to the nominal one (same R^-1 norm) and a Doppler shifted so that the
// Doppler cosine squared is cos2_doppler; detectors keep the nominal vectors.
// No closed form is attached.
CurveSet mismatch_sweep(const Scenario& sc, double cos2_spatial, double cos2_doppler, std::span<const double> snr_grid,
                        const McConfig& mc, const SweepOptions& opts);

// pd_curves for the configured array (labels "<det>/FDA-MIMO") and for the
// same scenario with delta_f = 0 (labels "<det>/MIMO").
CurveSet compare_fda_mimo(const Scenario& sc, std::span<const double> snr_grid, const McConfig& mc,
                          const SweepOptions& opts);

// alpha per unit |xi|^2: (w^T w*) a^H R^-1 a for the scenario's target.
double alpha_per_unit_power(const Scenario& sc);

// ---------------------------------------------------------------------------
// CFAR
// ---------------------------------------------------------------------------

struct NamedCovariance {
    std::string label;
    CMatrix covariance;
};

// {identity, 100 I, scenario jamming covariance, random PD (seeded)}.
std::vector<NamedCovariance> standard_cfar_covariances(const Scenario& sc, std::uint64_t seed);

struct CfarEntry {
    std::string covariance;
    DetectorKind detector = DetectorKind::oglrt;
    double threshold = 0.0;
    Proportion pfa;          // 99% Wilson interval
    bool within_99 = false;  // target inside the 99% interval
    bool within_3se = false; // |pfa_hat - target| <= 3 sqrt(target (1 - target) / n)
};

struct CfarReport {
    double target_pfa = 0.0;
    std::vector<CfarEntry> entries;

    bool all_within_99() const;
};

// Empirical PFA of each detector at its fixed threshold under every listed
// covariance, using mc.trials_pd H0 trials per covariance.
CfarReport cfar_check(const Scenario& sc, std::span<const DetectorKind> detectors,
                      std::span<const double> thresholds, std::span<const NamedCovariance> covariances,
                      const McConfig& mc, GlrtNoForm form = GlrtNoForm::plain);

} // namespace fdamimo

#endif
