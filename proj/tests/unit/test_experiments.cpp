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

#include <gtest/gtest.h>

#include <json.hpp>
#include <algorithm>
#include <string>

#include "fdamimo/experiments.hpp"

using namespace fdamimo;

namespace {

const char* kSmall = R"({
  "waveform": {"k_snapshots": 6},
  "training": {"l_cells": 4},
  "mc": {"pfa": 0.01, "trials_threshold": 2000, "trials_pd": 400, "seed": 5, "workers": 1},
  "detectors": ["OGLRT", "TGLRT"],
  "sweep": {"kind": "snr", "grid": [-6.0, 2.0]}
})";

std::string error_of(const std::string& text)
{
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST(Config, MissingRequiredFieldIsNamed)
{
    EXPECT_NE(error_of(R"({"waveform": {"k_snapshots": 6}})").find("training.l_cells"), std::string::npos);
    EXPECT_NE(error_of(R"({"training": {"l_cells": 4}})").find("waveform.k_snapshots"), std::string::npos);
}

TEST(Config, UnknownKeysAndBadValuesRejected)
{
    EXPECT_NE(error_of(R"({"waveform": {"k_snapshots": 6, "kk": 1}, "training": {"l_cells": 4}})").find("kk"),
              std::string::npos);
    EXPECT_NE(error_of(R"({"waveform": {"k_snapshots": 6}, "training": {"l_cells": 4}, "mc": {"pfa": 2}})")
                  .find("mc.pfa"),
              std::string::npos);
    EXPECT_FALSE(error_of(R"({"waveform": {"k_snapshots": 6}, "training": {"l_cells": 4}, "detectors": ["Foo"]})")
                     .empty());
    EXPECT_FALSE(error_of("{not json").empty());
}

TEST(Config, OverridesApplyAndResolvedJsonRoundTrips)
{
    const ExperimentConfig cfg = parse_config(kSmall, Overrides{99u, 0.05, 3u});
    EXPECT_EQ(cfg.mc.seed, 99u);
    EXPECT_DOUBLE_EQ(cfg.mc.pfa, 0.05);
    EXPECT_EQ(cfg.mc.workers, 3u);
    const ExperimentConfig again = parse_config(resolved_json(cfg));
    EXPECT_EQ(resolved_json(again), resolved_json(cfg));
}

TEST(Config, Workers)
{
    EXPECT_EQ(parse_workers("auto"), 0u);
    EXPECT_EQ(parse_workers("4"), 4u);
    EXPECT_THROW(parse_workers("-1"), ArgumentError);
    EXPECT_THROW(parse_workers("x"), ArgumentError);
}

TEST(Experiments, SubcommandNames)
{
    for (const char* name : {"threshold", "pd-curve", "mismatch", "compare-mimo", "validate", "cfar", "run"})
        EXPECT_EQ(to_string(parse_subcommand(name)), name);
    EXPECT_THROW(parse_subcommand("nope"), ArgumentError);
}

TEST(Experiments, PdCurveCsvIsReproducibleAcrossWorkers)
{
    const ExperimentResult a = run_experiment(Subcommand::pd_curve, parse_config(kSmall, Overrides{{}, {}, 1u}));
    const ExperimentResult b = run_experiment(Subcommand::pd_curve, parse_config(kSmall, Overrides{{}, {}, 2u}));
    EXPECT_EQ(a.exit_code, kExitOk);
    EXPECT_EQ(a.csv, b.csv);
    EXPECT_EQ(a.csv.rfind(kCsvHeader, 0), 0u);
    // header + 2 detectors x 2 SNR points
    EXPECT_EQ(std::count(a.csv.begin(), a.csv.end(), '\n'), 5);
    const auto manifest = nlohmann::json::parse(a.manifest);
    EXPECT_EQ(manifest.at("subcommand"), "pd-curve");
    EXPECT_EQ(manifest.at("config").at("mc").at("seed"), 5);
}

TEST(Experiments, MismatchRowsHaveEmptyClosedForm)
{
    const ExperimentResult r = run_experiment(Subcommand::mismatch, parse_config(kSmall));
    std::size_t pos = r.csv.find('\n') + 1;
    const std::string first = r.csv.substr(pos, r.csv.find('\n', pos) - pos);
    // closed_form is the eighth field
    std::size_t field = 0, start = 0;
    for (int i = 0; i < 7; ++i) start = first.find(',', start) + 1;
    field = first.find(',', start);
    EXPECT_EQ(field, start);
}

TEST(Experiments, ValidateFailsOnTinyTolerance)
{
    std::string text = kSmall;
    text.insert(text.rfind('}'), R"(, "validate": {"tolerance": 1e-9})");
    const ExperimentResult r = run_experiment(Subcommand::validate, parse_config(text));
    EXPECT_EQ(r.exit_code, kExitTolerance);
}
