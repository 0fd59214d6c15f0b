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

#include "fdamimo/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <thread>

#include "fdamimo/numerics.hpp"
#include "fdamimo/rng.hpp"

namespace fdamimo {

namespace {

bool any_training(std::span<const DetectorKind> kinds)
{
    return std::any_of(kinds.begin(), kinds.end(), [](DetectorKind k) { return uses_training(k); });
}

Proportion count_exceedances(std::span<const double> stats, double threshold, double z)
{
    const auto hits = static_cast<std::size_t>(
        std::count_if(stats.begin(), stats.end(), [&](double v) { return v > threshold; }));
    return wilson_interval(hits, stats.size(), z);
}

TrialBatch make_batch(const SignalModel& model, const Scenario& sc, std::vector<DetectorKind> detectors,
                      const McConfig& mc, std::string_view experiment, std::size_t trials, GlrtNoForm form)
{
    TrialBatch b;
    b.model = &model;
    b.nominal_steering = joint_steering(sc.target_range, sc.target_angle, sc.array).values;
    b.nominal_doppler = doppler_vector(sc.f_d, sc.k_snapshots).values;
    b.detectors = std::move(detectors);
    b.glrt_no_form = form;
    b.seed = mc.seed;
    b.experiment = experiment_tag(experiment);
    b.trials = trials;
    b.workers = mc.workers;
    return b;
}

// Thresholds at mc.pfa for every requested detector, either from an H0 run or
// from the closed forms (training-free detectors always use the H0 run).
std::vector<double> sweep_thresholds(const SignalModel& h0_model, const Scenario& sc, const McConfig& mc,
                                     const SweepOptions& opts, const DofParams& dof)
{
    std::vector<double> thr(opts.detectors.size(), 0.0);
    std::vector<DetectorKind> need_mc;
    for (std::size_t i = 0; i < opts.detectors.size(); ++i) {
        const DetectorKind k = opts.detectors[i];
        if (opts.thresholds == ThresholdSource::closed_form && uses_training(k)) {
            thr[i] = closed_form_threshold(k, mc.pfa, dof);
        } else {
            need_mc.push_back(k);
        }
    }
    if (need_mc.empty()) return thr;
    TrialBatch batch = make_batch(h0_model, sc, need_mc, mc, "threshold", mc.threshold_trials(), opts.glrt_no_form);
    const auto stats = run_trials(batch);
    std::size_t j = 0;
    for (std::size_t i = 0; i < opts.detectors.size(); ++i) {
        if (opts.thresholds == ThresholdSource::closed_form && uses_training(opts.detectors[i])) continue;
        thr[i] = empirical_threshold(stats[j++], mc.pfa).value;
    }
    return thr;
}

// PD curves for data generated by `model` while detectors use the scenario's
// nominal vectors.
CurveSet run_pd_sweep(const SignalModel& model, const Scenario& sc, std::span<const double> snr_grid,
                      const McConfig& mc, const SweepOptions& opts, const std::string& label_suffix,
                      bool with_closed_form)
{
    mc.validate();
    const DofParams dof = DofParams::from_dims(sc.l_cells, sc.k_snapshots, sc.dim(), opts.dof);
    const std::vector<double> thr = sweep_thresholds(model, sc, mc, opts, dof);
    const double alpha_unit = with_closed_form ? alpha_per_unit_power(sc) : 0.0;

    CurveSet set;
    set.x_kind = "snr_db";
    for (std::size_t i = 0; i < opts.detectors.size(); ++i) {
        Curve c;
        c.detector = opts.detectors[i];
        c.label = std::string(to_string(c.detector)) + label_suffix;
        set.curves.push_back(std::move(c));
    }
    std::vector<double> cf_thr(opts.detectors.size(), 0.0);
    if (with_closed_form) {
        for (std::size_t i = 0; i < opts.detectors.size(); ++i) {
            if (uses_training(opts.detectors[i])) cf_thr[i] = closed_form_threshold(opts.detectors[i], mc.pfa, dof);
        }
    }

    for (const double snr : snr_grid) {
        TrialBatch batch = make_batch(model, sc, opts.detectors, mc, "pd", mc.trials_pd, opts.glrt_no_form);
        batch.xi = amplitude_for_snr(snr, sc.noise_power);
        batch.hypothesis = Hypothesis::h1;
        const auto stats = run_trials(batch);
        for (std::size_t i = 0; i < opts.detectors.size(); ++i) {
            CurvePoint p;
            p.x = snr;
            p.threshold = thr[i];
            p.mc = count_exceedances(stats[i], thr[i], kZ95);
            if (with_closed_form && uses_training(opts.detectors[i])) {
                const double alpha = alpha_unit * std::norm(batch.xi.xi);
                p.closed_form = closed_form_pd(opts.detectors[i], cf_thr[i], alpha, dof);
            }
            set.curves[i].points.push_back(p);
        }
    }
    return set;
}

} // namespace

std::size_t McConfig::threshold_trials() const
{
    if (trials_threshold != 0) return trials_threshold;
    return static_cast<std::size_t>(std::ceil(100.0 / pfa - 1e-9));
}

void McConfig::validate() const
{
    if (!(pfa > 0.0 && pfa < 1.0)) throw ArgumentError("mc.pfa: must lie in (0, 1)");
    if (trials_pd < 1) throw ArgumentError("mc.trials_pd: must be >= 1");
    if (static_cast<double>(threshold_trials()) * pfa < 10.0 - 1e-9) {
        throw ArgumentError("mc.trials_threshold: need trials_threshold * pfa >= 10");
    }
}

unsigned resolve_workers(unsigned requested)
{
    if (requested > 0) return requested;
    if (const char* env = std::getenv(kWorkersEnv)) {
        const std::string v(env);
        if (!v.empty() && v != "auto") {
            const long n = std::strtol(v.c_str(), nullptr, 10);
            if (n > 0) return static_cast<unsigned>(n);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

Proportion wilson_interval(std::size_t successes, std::size_t trials, double z)
{
    Proportion p;
    p.successes = successes;
    p.trials = trials;
    if (trials == 0) return p;
    const double n = static_cast<double>(trials);
    const double ph = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double centre = (ph + z2 / (2.0 * n)) / (1.0 + z2 / n);
    const double half = z * std::sqrt(ph * (1.0 - ph) / n + z2 / (4.0 * n * n)) / (1.0 + z2 / n);
    p.estimate = ph;
    p.ci_low = std::max(0.0, centre - half);
    p.ci_high = std::min(1.0, centre + half);
    if (successes == 0) p.ci_low = 0.0;
    if (successes == trials) p.ci_high = 1.0;
    return p;
}

QuantileEstimate empirical_threshold(std::vector<double> statistics, double pfa, double z_se)
{
    const std::size_t n = statistics.size();
    if (n == 0) throw ArgumentError("empirical_threshold: no statistics");
    if (!(pfa > 0.0 && pfa < 1.0)) throw ArgumentError("empirical_threshold: pfa must lie in (0, 1)");
    std::sort(statistics.begin(), statistics.end(), std::greater<>());
    const double np = static_cast<double>(n) * pfa;
    const auto rank = static_cast<std::size_t>(std::clamp(std::ceil(np - 1e-9), 1.0, static_cast<double>(n)));
    const double band = z_se * std::sqrt(np * (1.0 - pfa));
    // Larger rank means smaller value.
    const auto rank_hi = static_cast<std::size_t>(std::clamp(std::floor(np - band), 1.0, static_cast<double>(n)));
    const auto rank_lo = static_cast<std::size_t>(std::clamp(std::ceil(np + band), 1.0, static_cast<double>(n)));
    return {statistics[rank - 1], statistics[rank_lo - 1], statistics[rank_hi - 1], rank, n};
}

double trial_statistic(DetectorKind kind, const DataSet& ds, const CMatrix&, const DetectionOutcome* outcome,
                       const CVector& a, const CVector& omega, GlrtNoForm form)
{
    switch (kind) {
    case DetectorKind::glrt_no: return glrt_no(ds.z, a, omega, form);
    case DetectorKind::rao_no: return rao_no(ds.z, a, omega);
    case DetectorKind::wald_no: return wald_no(ds.z, a, omega);
    default: break;
    }
    if (outcome == nullptr) throw ArgumentError("trial_statistic: training-based detector needs an outcome");
    return decision_statistic(kind, *outcome);
}

std::vector<std::vector<double>> run_trials(const TrialBatch& batch)
{
    if (batch.model == nullptr) throw ArgumentError("run_trials: no signal model");
    if (batch.detectors.empty()) throw ArgumentError("run_trials: no detectors requested");
    const std::size_t n = batch.trials;
    const std::size_t nd = batch.detectors.size();
    std::vector<std::vector<double>> out(nd, std::vector<double>(n, 0.0));
    const bool need_training = any_training(batch.detectors);

    auto run_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t) {
            try {
                Rng rng = trial_stream(batch.seed, batch.experiment, t);
                const DataSet ds = synthesize(*batch.model, batch.xi, batch.hypothesis, rng);
                CMatrix s;
                DetectionOutcome outcome;
                if (need_training) {
                    s = accumulate_gram(ds.training);
                    outcome = decomposition(ds.z, s, batch.nominal_steering, batch.nominal_doppler);
                }
                for (std::size_t d = 0; d < nd; ++d) {
                    out[d][t] = trial_statistic(batch.detectors[d], ds, s, need_training ? &outcome : nullptr,
                                                batch.nominal_steering, batch.nominal_doppler, batch.glrt_no_form);
                }
            } catch (const std::exception& e) {
                throw NumericError("trial " + std::to_string(t) + " (experiment " + std::to_string(batch.experiment) +
                                   ", seed " + std::to_string(batch.seed) + "): " + e.what());
            }
        }
    };

    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(resolve_workers(batch.workers),
                                                                         std::max<std::size_t>(n, 1)));
    if (workers <= 1) {
        run_range(0, n);
        return out;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t begin = n * w / workers;
            const std::size_t end = n * (w + 1) / workers;
            pool.emplace_back([&, w, begin, end] {
                try {
                    run_range(begin, end);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    // Report the failure with the lowest trial index, independent of timing.
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

QuantileEstimate estimate_threshold(DetectorKind detector, const Scenario& sc, const McConfig& mc)
{
    mc.validate();
    const SignalModel model = SignalModel::from_scenario(sc);
    const TrialBatch batch = make_batch(model, sc, {detector}, mc, "threshold", mc.threshold_trials(),
                                        GlrtNoForm::plain);
    return empirical_threshold(run_trials(batch)[0], mc.pfa);
}

Proportion estimate_pd(DetectorKind detector, double threshold, const Scenario& sc, double snr_db, const McConfig& mc)
{
    mc.validate();
    if (!std::isfinite(threshold)) throw ArgumentError("estimate_pd: threshold must be finite");
    const SignalModel model = SignalModel::from_scenario(sc);
    TrialBatch batch = make_batch(model, sc, {detector}, mc, "pd", mc.trials_pd, GlrtNoForm::plain);
    batch.xi = amplitude_for_snr(snr_db, sc.noise_power);
    batch.hypothesis = Hypothesis::h1;
    return count_exceedances(run_trials(batch)[0], threshold, kZ95);
}

const Curve& CurveSet::find(const std::string& label) const
{
    for (const Curve& c : curves) {
        if (c.label == label) return c;
    }
    throw ArgumentError("CurveSet: no curve labelled '" + label + "'");
}

double alpha_per_unit_power(const Scenario& sc)
{
    const CVector a = joint_steering(sc.target_range, sc.target_angle, sc.array).values;
    const CVector w = doppler_vector(sc.f_d, sc.k_snapshots).values;
    return noncentrality_alpha(cd(1.0, 0.0), w, a, build_covariance(sc));
}

CurveSet threshold_curves(const Scenario& sc, std::span<const double> pfa_grid, const McConfig& mc,
                          const SweepOptions& opts)
{
    if (pfa_grid.empty()) throw ArgumentError("threshold_curves: empty pfa grid");
    const double min_pfa = *std::min_element(pfa_grid.begin(), pfa_grid.end());
    McConfig run = mc;
    run.pfa = min_pfa;
    run.validate();
    const std::size_t trials = run.threshold_trials();
    const SignalModel model = SignalModel::from_scenario(sc);
    const DofParams dof = DofParams::from_dims(sc.l_cells, sc.k_snapshots, sc.dim(), opts.dof);
    const auto stats = run_trials(make_batch(model, sc, opts.detectors, mc, "threshold", trials, opts.glrt_no_form));

    CurveSet set;
    set.x_kind = "pfa";
    for (std::size_t i = 0; i < opts.detectors.size(); ++i) {
        Curve c;
        c.detector = opts.detectors[i];
        c.label = std::string(to_string(c.detector));
        for (const double p : pfa_grid) {
            const QuantileEstimate q = empirical_threshold(stats[i], p);
            CurvePoint pt;
            pt.x = p;
            pt.threshold = q.value;
            pt.threshold_lo = q.lo;
            pt.threshold_hi = q.hi;
            pt.mc = count_exceedances(stats[i], q.value, kZ95);
            if (opts.closed_form && uses_training(c.detector)) {
                pt.closed_form = closed_form_threshold(c.detector, p, dof);
            }
            c.points.push_back(pt);
        }
        set.curves.push_back(std::move(c));
    }
    return set;
}

CurveSet pd_curves(const Scenario& sc, std::span<const double> snr_grid, const McConfig& mc, const SweepOptions& opts)
{
    const SignalModel model = SignalModel::from_scenario(sc);
    return run_pd_sweep(model, sc, snr_grid, mc, opts, "", opts.closed_form);
}

CurveSet mismatch_sweep(const Scenario& sc, double cos2_spatial_target, double cos2_doppler_target,
                        std::span<const double> snr_grid, const McConfig& mc, const SweepOptions& opts)
{
    if (!(cos2_spatial_target > 0.0 && cos2_spatial_target <= 1.0) ||
        !(cos2_doppler_target > 0.0 && cos2_doppler_target <= 1.0)) {
        throw ArgumentError("mismatch_sweep: cos2 targets must lie in (0, 1]");
    }
    sc.validate();
    const CMatrix r = build_covariance(sc);
    const CVector nominal = joint_steering(sc.target_range, sc.target_angle, sc.array).values;
    CVector actual = nominal;
    if (cos2_spatial_target < 1.0) {
        // Unit R^-1 norm from the construction; rescale to the nominal's norm
        // so that only the direction changes.
        const auto llt = hermitian_factor(r, "mismatch_sweep");
        actual = make_mismatched_steering(nominal, cos2_spatial_target, r) *
                 std::sqrt(nominal.dot(llt.solve(nominal)).real());
    }
    const double f_actual = find_mismatched_doppler(sc.f_d, cos2_doppler_target, sc.k_snapshots);
    const SignalModel model =
        SignalModel::from_parts(r, actual, doppler_vector(f_actual, sc.k_snapshots).values, sc.l_cells);
    return run_pd_sweep(model, sc, snr_grid, mc, opts, "", false);
}

CurveSet compare_fda_mimo(const Scenario& sc, std::span<const double> snr_grid, const McConfig& mc,
                          const SweepOptions& opts)
{
    CurveSet fda = run_pd_sweep(SignalModel::from_scenario(sc), sc, snr_grid, mc, opts, "/FDA-MIMO", opts.closed_form);
    Scenario mimo = sc;
    mimo.array.delta_f = 0.0;
    CurveSet plain = run_pd_sweep(SignalModel::from_scenario(mimo), mimo, snr_grid, mc, opts, "/MIMO",
                                  opts.closed_form);
    for (Curve& c : plain.curves) fda.curves.push_back(std::move(c));
    return fda;
}

std::vector<NamedCovariance> standard_cfar_covariances(const Scenario& sc, std::uint64_t seed)
{
    const Eigen::Index dim = sc.dim();
    std::vector<NamedCovariance> out;
    out.push_back({"identity", CMatrix::Identity(dim, dim)});
    out.push_back({"scaled_100", 100.0 * CMatrix::Identity(dim, dim)});
    out.push_back({"jamming", build_covariance(sc)});
    Rng rng = trial_stream(seed, experiment_tag("random-covariance"), 0);
    const CMatrix g = standard_complex_normal(dim, 2 * dim, rng);
    CMatrix rnd = g * g.adjoint() / static_cast<double>(2 * dim);
    rnd.diagonal().array() += 0.1;
    out.push_back({"random_pd", 0.5 * (rnd + rnd.adjoint())});
    return out;
}

bool CfarReport::all_within_99() const
{
    return std::all_of(entries.begin(), entries.end(), [](const CfarEntry& e) { return e.within_99; });
}

CfarReport cfar_check(const Scenario& sc, std::span<const DetectorKind> detectors, std::span<const double> thresholds,
                      std::span<const NamedCovariance> covariances, const McConfig& mc, GlrtNoForm form)
{
    mc.validate();
    if (detectors.size() != thresholds.size()) throw ArgumentError("cfar_check: one threshold per detector");
    CfarReport report;
    report.target_pfa = mc.pfa;
    const CVector a = joint_steering(sc.target_range, sc.target_angle, sc.array).values;
    const CVector w = doppler_vector(sc.f_d, sc.k_snapshots).values;
    for (const NamedCovariance& cov : covariances) {
        const SignalModel model = SignalModel::from_parts(cov.covariance, a, w, sc.l_cells);
        TrialBatch batch = make_batch(model, sc, {detectors.begin(), detectors.end()}, mc, "cfar:" + cov.label,
                                      mc.trials_pd, form);
        const auto stats = run_trials(batch);
        const double n = static_cast<double>(mc.trials_pd);
        for (std::size_t i = 0; i < detectors.size(); ++i) {
            CfarEntry e;
            e.covariance = cov.label;
            e.detector = detectors[i];
            e.threshold = thresholds[i];
            e.pfa = count_exceedances(stats[i], thresholds[i], kZ99);
            e.within_99 = e.pfa.ci_low <= mc.pfa && mc.pfa <= e.pfa.ci_high;
            e.within_3se = std::abs(e.pfa.estimate - mc.pfa) <= 3.0 * std::sqrt(mc.pfa * (1.0 - mc.pfa) / n);
            report.entries.push_back(e);
        }
    }
    return report;
}

} // namespace fdamimo
