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

#ifndef FDAMIMO_EXPERIMENTS_HPP
#define FDAMIMO_EXPERIMENTS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "fdamimo/config.hpp"

namespace fdamimo {

enum class Subcommand { threshold, pd_curve, mismatch, compare_mimo, validate, cfar, run };

Subcommand parse_subcommand(std::string_view name);
std::string_view to_string(Subcommand cmd);

inline constexpr const char* kCsvHeader =
    "detector,x_kind,x_value,threshold,mc_estimate,ci_low,ci_high,closed_form,seed";

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitNumeric = 2;
inline constexpr int kExitTolerance = 3;

struct ExperimentResult {
    std::string csv;       // header plus one row per (detector, x)
    std::string manifest;  // resolved config, subcommand and output notes
    std::string summary;   // human-readable lines for stdout
    int exit_code = kExitOk;
};

// Default grids: SNR -20..20 dB in 2 dB steps; PFA {mc.pfa}.
std::vector<double> default_grid(Subcommand cmd, const ExperimentConfig& cfg);

// Runs one subcommand. `run` dispatches on sweep.kind (snr when absent).
// Row conventions:
//  - threshold: threshold and mc_estimate hold the MC quantile, ci_low/ci_high
//    its order-statistic band and closed_form the analytic threshold.
//  - pd-curve, mismatch, compare-mimo, validate: mc_estimate is PD with a 95%
//    Wilson interval; closed_form is the analytic PD at the analytic threshold.
//  - cfar: x_kind is "covariance:<label>", x_value the covariance index,
//    mc_estimate the empirical PFA with a 99% Wilson interval and closed_form
//    the target PFA.
ExperimentResult run_experiment(Subcommand cmd, ExperimentConfig cfg);

// Formats a curve set as CSV rows (no header).
std::string csv_rows(const CurveSet& set, std::uint64_t seed);

} // namespace fdamimo

#endif
