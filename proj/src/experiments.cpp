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

#include "fdamimo/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace fdamimo {

namespace {

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string row(const std::string& detector, const std::string& x_kind, double x, double threshold, double estimate,
                double lo, double hi, const std::optional<double>& closed_form, std::uint64_t seed)
{
    std::string r = detector + "," + x_kind + "," + fmt(x) + "," + fmt(threshold) + "," + fmt(estimate) + "," +
                    fmt(lo) + "," + fmt(hi) + ",";
    if (closed_form) r += fmt(*closed_form);
    r += "," + std::to_string(seed) + "\n";
    return r;
}

std::vector<DetectorKind> training_only(const std::vector<DetectorKind>& in)
{
    std::vector<DetectorKind> out;
    std::copy_if(in.begin(), in.end(), std::back_inserter(out), uses_training);
    return out;
}

SweepKind sweep_for(Subcommand cmd, const ExperimentConfig& cfg)
{
    switch (cmd) {
    case Subcommand::threshold: return SweepKind::pfa;
    case Subcommand::mismatch: return SweepKind::mismatch;
    case Subcommand::compare_mimo: return SweepKind::fda_vs_mimo;
    case Subcommand::run: return cfg.sweep_kind.value_or(SweepKind::snr);
    default: return SweepKind::snr;
    }
}

ExperimentResult run_cfar(const ExperimentConfig& cfg)
{
    const Scenario& sc = cfg.scenario;
    const DofParams dof = DofParams::from_dims(sc.l_cells, sc.k_snapshots, sc.dim(), cfg.options.dof);
    std::vector<double> thresholds;
    Scenario white = sc;
    white.jammers.clear();
    for (DetectorKind k : cfg.detectors()) {
        if (uses_training(k)) {
            thresholds.push_back(closed_form_threshold(k, cfg.mc.pfa, dof));
        } else {
            thresholds.push_back(estimate_threshold(k, white, cfg.mc).value);
        }
    }
    const auto covs = standard_cfar_covariances(sc, cfg.mc.seed);
    const CfarReport report = cfar_check(sc, cfg.detectors(), thresholds, covs, cfg.mc, cfg.options.glrt_no_form);

    ExperimentResult res;
    res.csv = std::string(kCsvHeader) + "\n";
    for (std::size_t i = 0; i < report.entries.size(); ++i) {
        const CfarEntry& e = report.entries[i];
        const auto idx = std::find_if(covs.begin(), covs.end(), [&](const auto& c) { return c.label == e.covariance; }) -
                         covs.begin();
        res.csv += row(std::string(to_string(e.detector)), "covariance:" + e.covariance, static_cast<double>(idx),
                       e.threshold, e.pfa.estimate, e.pfa.ci_low, e.pfa.ci_high, report.target_pfa, cfg.mc.seed);
        res.summary += std::string(to_string(e.detector)) + " " + e.covariance + " pfa=" + fmt(e.pfa.estimate) +
                       (e.within_99 ? " ok" : " OUTSIDE 99% interval") + "\n";
    }
    res.summary += report.all_within_99() ? "cfar: all within 99% intervals\n" : "cfar: some entries outside\n";
    return res;
}

} // namespace

Subcommand parse_subcommand(std::string_view name)
{
    for (Subcommand c : {Subcommand::threshold, Subcommand::pd_curve, Subcommand::mismatch, Subcommand::compare_mimo,
                         Subcommand::validate, Subcommand::cfar, Subcommand::run}) {
        if (to_string(c) == name) return c;
    }
    throw ArgumentError("unknown subcommand '" + std::string(name) + "'");
}

std::string_view to_string(Subcommand cmd)
{
    switch (cmd) {
    case Subcommand::threshold: return "threshold";
    case Subcommand::pd_curve: return "pd-curve";
    case Subcommand::mismatch: return "mismatch";
    case Subcommand::compare_mimo: return "compare-mimo";
    case Subcommand::validate: return "validate";
    case Subcommand::cfar: return "cfar";
    case Subcommand::run: return "run";
    }
    return "?";
}

std::vector<double> default_grid(Subcommand cmd, const ExperimentConfig& cfg)
{
    if (sweep_for(cmd, cfg) == SweepKind::pfa) return {cfg.mc.pfa};
    std::vector<double> g;
    for (int s = -20; s <= 20; s += 2) g.push_back(s);
    return g;
}

std::string csv_rows(const CurveSet& set, std::uint64_t seed)
{
    std::string out;
    for (const Curve& c : set.curves) {
        for (const CurvePoint& p : c.points) {
            if (set.x_kind == "pfa") {
                out += row(c.label, set.x_kind, p.x, p.threshold, p.threshold, p.threshold_lo.value_or(p.threshold),
                           p.threshold_hi.value_or(p.threshold), p.closed_form, seed);
            } else {
                out += row(c.label, set.x_kind, p.x, p.threshold, p.mc.estimate, p.mc.ci_low, p.mc.ci_high,
                           p.closed_form, seed);
            }
        }
    }
    return out;
}

ExperimentResult run_experiment(Subcommand cmd, ExperimentConfig cfg)
{
    const SweepKind kind = sweep_for(cmd, cfg);
    std::string note;
    if (cfg.sweep_kind && *cfg.sweep_kind != kind && cmd != Subcommand::validate && cmd != Subcommand::cfar) {
        // The grid belongs to another sweep kind.
        note = "note: sweep.kind '" + std::string(to_string(*cfg.sweep_kind)) + "' ignored by " +
               std::string(to_string(cmd)) + "; using the default grid\n";
        cfg.grid.clear();
    }
    if (cfg.sweep_kind || cmd != Subcommand::run) cfg.sweep_kind = kind;
    if (cfg.grid.empty()) cfg.grid = default_grid(cmd, cfg);

    ExperimentResult res;
    if (cmd == Subcommand::cfar) {
        res = run_cfar(cfg);
    } else {
        CurveSet set;
        SweepOptions opts = cfg.options;
        if (cmd == Subcommand::validate) {
            opts.detectors = training_only(opts.detectors);
            if (opts.detectors.empty()) throw ConfigError("detectors: validate needs a training-based detector");
            opts.thresholds = ThresholdSource::closed_form;
            opts.closed_form = true;
            set = pd_curves(cfg.scenario, cfg.grid, cfg.mc, opts);
        } else if (kind == SweepKind::pfa) {
            for (double p : cfg.grid) {
                if (!(p > 0.0 && p < 1.0)) throw ConfigError("sweep.grid: pfa values must lie in (0, 1)");
            }
            set = threshold_curves(cfg.scenario, cfg.grid, cfg.mc, opts);
        } else if (kind == SweepKind::mismatch) {
            set = mismatch_sweep(cfg.scenario, cfg.cos2_spatial, cfg.cos2_doppler, cfg.grid, cfg.mc, opts);
        } else if (kind == SweepKind::fda_vs_mimo) {
            set = compare_fda_mimo(cfg.scenario, cfg.grid, cfg.mc, opts);
        } else {
            set = pd_curves(cfg.scenario, cfg.grid, cfg.mc, opts);
        }
        res.csv = std::string(kCsvHeader) + "\n" + csv_rows(set, cfg.mc.seed);

        if (cmd == Subcommand::validate) {
            double worst_all = 0.0;
            for (const Curve& c : set.curves) {
                double worst = 0.0;
                for (const CurvePoint& p : c.points) worst = std::max(worst, std::abs(p.mc.estimate - *p.closed_form));
                worst_all = std::max(worst_all, worst);
                res.summary += c.label + ": max |MC - closed form| = " + fmt(worst) + "\n";
            }
            const bool ok = worst_all <= cfg.validate_tolerance;
            res.summary += std::string("validate: ") + (ok ? "PASS" : "FAIL") + " (tolerance " +
                           fmt(cfg.validate_tolerance) + ")\n";
            if (!ok) res.exit_code = kExitTolerance;
        } else {
            for (const Curve& c : set.curves) {
                res.summary += c.label + ": " + std::to_string(c.points.size()) + " points\n";
            }
        }
    }

    res.summary = note + res.summary;

    nlohmann::json m;
    m["subcommand"] = std::string(to_string(cmd));
    m["csv_header"] = kCsvHeader;
    m["config"] = nlohmann::json::parse(resolved_json(cfg));
    m["exit_code"] = res.exit_code;
    res.manifest = m.dump(2) + "\n";
    return res;
}

} // namespace fdamimo
