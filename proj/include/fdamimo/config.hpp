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

#ifndef FDAMIMO_CONFIG_HPP
#define FDAMIMO_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include "fdamimo/montecarlo.hpp"

namespace fdamimo {

// Schema violation; the message starts with the offending field path.
class ConfigError : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

enum class SweepKind { snr, pfa, mismatch, fda_vs_mimo };

std::string_view to_string(SweepKind kind);

struct ExperimentConfig {
    Scenario scenario;
    McConfig mc;
    SweepOptions options;
    std::optional<SweepKind> sweep_kind;
    std::vector<double> grid;          // empty: subcommand default
    double cos2_spatial = 1.0;
    double cos2_doppler = 1.0;
    double validate_tolerance = 0.02;

    // Detector list, defaulting to the training-based four.
    const std::vector<DetectorKind>& detectors() const { return options.detectors; }
};

// Command-line overrides applied after parsing and before validation.
struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<double> pfa;
    std::optional<unsigned> workers;  // 0 means auto
};

// Parses JSON text. training.l_cells and waveform.k_snapshots are required;
// everything else defaults to the standard jamming setup (M=4, N=3, f0=2 GHz,
// delta_f=1 MHz, f_d=0.2, half-wavelength spacing, pfa=1e-3). Unknown keys are
// rejected. Throws ConfigError.
ExperimentConfig parse_config(const std::string& json_text, const Overrides& overrides = {});
ExperimentConfig load_config(const std::string& path, const Overrides& overrides = {});

// Fully resolved configuration as pretty-printed JSON (stable key order).
std::string resolved_json(const ExperimentConfig& cfg);

// "auto" or a positive integer.
unsigned parse_workers(const std::string& text);

} // namespace fdamimo

#endif
