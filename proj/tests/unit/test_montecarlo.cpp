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

#include <cmath>
#include <vector>

#include "fdamimo/montecarlo.hpp"

using namespace fdamimo;

namespace {

McConfig small_mc(double pfa = 1e-2)
{
    McConfig mc;
    mc.pfa = pfa;
    mc.trials_threshold = 4000;
    mc.trials_pd = 2000;
    mc.seed = 11;
    mc.workers = 1;
    return mc;
}

} // namespace

TEST(McConfig, DefaultsAndValidation)
{
    McConfig mc;
    EXPECT_EQ(mc.threshold_trials(), 100000u);
    mc.pfa = 1e-2;
    EXPECT_EQ(mc.threshold_trials(), 10000u);
    mc.trials_threshold = 500;
    EXPECT_THROW(mc.validate(), ArgumentError);
    mc.trials_threshold = 1000;
    EXPECT_NO_THROW(mc.validate());
    mc.trials_pd = 0;
    EXPECT_THROW(mc.validate(), ArgumentError);
}

TEST(Wilson, KnownInterval)
{
    const Proportion p = wilson_interval(50, 100);
    EXPECT_DOUBLE_EQ(p.estimate, 0.5);
    EXPECT_NEAR(p.ci_low, 0.4038, 1e-4);
    EXPECT_NEAR(p.ci_high, 0.5962, 1e-4);
    const Proportion z = wilson_interval(0, 100);
    EXPECT_EQ(z.ci_low, 0.0);
    EXPECT_GT(z.ci_high, 0.0);
    EXPECT_LE(z.estimate, z.ci_high);
}

TEST(EmpiricalThreshold, OrderStatistic)
{
    std::vector<double> v;
    for (int i = 1; i <= 1000; ++i) v.push_back(i);
    const QuantileEstimate q = empirical_threshold(v, 1e-2);
    EXPECT_EQ(q.rank, 10u);
    EXPECT_EQ(q.value, 991.0);
    EXPECT_LE(q.lo, q.value);
    EXPECT_GE(q.hi, q.value);
    int above = 0;
    for (double x : v) above += x > q.value;
    EXPECT_EQ(above, 9);
}

TEST(RunTrials, DeterministicAcrossWorkers)
{
    const Scenario sc = Scenario::jamming_defaults(4, 6);
    McConfig mc = small_mc();
    mc.workers = 1;
    const QuantileEstimate a = estimate_threshold(DetectorKind::oglrt, sc, mc);
    mc.workers = 3;
    const QuantileEstimate b = estimate_threshold(DetectorKind::oglrt, sc, mc);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.lo, b.lo);
    EXPECT_EQ(a.hi, b.hi);
}

TEST(EstimateThreshold, OglrtAndRaoNearAnalytic)
{
    Scenario sc = Scenario::jamming_defaults(4, 6);
    sc.jammers.clear();
    const McConfig mc = small_mc();
    const DofParams dof = DofParams::from_dims(4, 6, 12);
    for (DetectorKind k : {DetectorKind::oglrt, DetectorKind::rao}) {
        const QuantileEstimate q = estimate_threshold(k, sc, mc);
        const double exact = closed_form_threshold(k, mc.pfa, dof);
        EXPECT_LE(q.lo, exact) << to_string(k);
        EXPECT_GE(q.hi, exact) << to_string(k);
    }
}

TEST(EstimatePd, Limits)
{
    const Scenario sc = Scenario::jamming_defaults(4, 6);
    const McConfig mc = small_mc();
    const DofParams dof = DofParams::from_dims(4, 6, 12);
    const double thr = closed_form_threshold(DetectorKind::oglrt, mc.pfa, dof);
    const Proportion low = estimate_pd(DetectorKind::oglrt, thr, sc, -60.0, mc);
    EXPECT_LE(low.ci_low, mc.pfa);
    EXPECT_GE(low.ci_high, mc.pfa);
    const Proportion high = estimate_pd(DetectorKind::oglrt, thr, sc, 40.0, mc);
    EXPECT_EQ(high.estimate, 1.0);
}

TEST(Cfar, ScaledCovarianceGivesSameDecisions)
{
    const Scenario sc = Scenario::jamming_defaults(4, 6);
    const McConfig mc = small_mc();
    const DofParams dof = DofParams::from_dims(4, 6, 12);
    std::vector<DetectorKind> dets(kTrainingDetectors.begin(), kTrainingDetectors.end());
    std::vector<double> thr;
    for (DetectorKind k : dets) thr.push_back(closed_form_threshold(k, mc.pfa, dof));
    const CMatrix id = CMatrix::Identity(12, 12);
    // Same label, same stream: only the scale differs.
    const std::vector<NamedCovariance> a{{"x", id}}, b{{"x", 100.0 * id}};
    const CfarReport ra = cfar_check(sc, dets, thr, a, mc);
    const CfarReport rb = cfar_check(sc, dets, thr, b, mc);
    ASSERT_EQ(ra.entries.size(), 4u);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(ra.entries[i].pfa.successes, rb.entries[i].pfa.successes);
    EXPECT_EQ(standard_cfar_covariances(sc, 1).size(), 4u);
}

TEST(Curves, MatchedMismatchEqualsPdCurve)
{
    const Scenario sc = Scenario::jamming_defaults(4, 6);
    const McConfig mc = small_mc();
    SweepOptions opts;
    opts.closed_form = false;
    const std::vector<double> snr{0.0, 10.0};
    const CurveSet matched = pd_curves(sc, snr, mc, opts);
    const CurveSet mm = mismatch_sweep(sc, 1.0, 1.0, snr, mc, opts);
    ASSERT_EQ(matched.curves.size(), mm.curves.size());
    for (std::size_t c = 0; c < matched.curves.size(); ++c)
        for (std::size_t i = 0; i < snr.size(); ++i)
            EXPECT_EQ(matched.curves[c].points[i].mc.successes, mm.curves[c].points[i].mc.successes);
}

TEST(Curves, MimoLimitTwiceIsIdentical)
{
    Scenario sc = Scenario::jamming_defaults(2, 12);
    sc.array.delta_f = 0.0;
    const McConfig mc = small_mc();
    SweepOptions opts;
    opts.detectors = {DetectorKind::oglrt};
    const std::vector<double> snr{5.0};
    const CurveSet set = compare_fda_mimo(sc, snr, mc, opts);
    EXPECT_EQ(set.find("OGLRT/FDA-MIMO").points[0].mc.successes, set.find("OGLRT/MIMO").points[0].mc.successes);
    EXPECT_THROW(set.find("nope"), ArgumentError);
}

TEST(Curves, ThresholdCurveShape)
{
    const Scenario sc = Scenario::jamming_defaults(4, 6);
    McConfig mc = small_mc();
    SweepOptions opts;
    const std::vector<double> pfas{1e-1, 1e-2};
    const CurveSet set = threshold_curves(sc, pfas, mc, opts);
    EXPECT_EQ(set.x_kind, "pfa");
    for (const Curve& c : set.curves) {
        ASSERT_EQ(c.points.size(), 2u);
        EXPECT_LT(c.points[0].threshold, c.points[1].threshold);
        ASSERT_TRUE(c.points[1].closed_form.has_value());
    }
}

TEST(Curves, NoTrainingDetectorsRun)
{
    const Scenario sc = Scenario::jamming_defaults(2, 16);
    McConfig mc = small_mc();
    SweepOptions opts;
    opts.detectors = {DetectorKind::glrt_no, DetectorKind::rao_no, DetectorKind::wald_no};
    const std::vector<double> snr{20.0};
    const CurveSet set = pd_curves(sc, snr, mc, opts);
    for (const Curve& c : set.curves) {
        EXPECT_FALSE(c.points[0].closed_form.has_value());
        EXPECT_GT(c.points[0].mc.estimate, 0.5);
    }
}
