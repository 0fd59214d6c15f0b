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

#include <Eigen/Eigenvalues>
#include <cmath>
#include <vector>

#include "fdamimo/detectors.hpp"
#include "fdamimo/numerics.hpp"
#include "fdamimo/rng.hpp"
#include "fdamimo/scenario.hpp"

using namespace fdamimo;

namespace {

struct Fixture {
    CMatrix z;
    CMatrix s;
    CVector a;
    CVector omega;
};

Fixture scalar_fixture()
{
    Fixture f;
    f.z = CMatrix(1, 2);
    f.z << cd(1, 0), cd(0, 1);
    f.s = CMatrix::Constant(1, 1, cd(2, 0));
    f.a = CVector::Ones(1);
    f.omega = CVector::Ones(2);
    return f;
}

Fixture random_fixture(std::uint64_t seed, int dim = 12, int k = 6, int l = 4, double snr_db = 5.0)
{
    Scenario sc = Scenario::jamming_defaults(l, k);
    if (dim != 12) {
        sc = Scenario{};
        sc.array = ArrayConfig::half_wavelength(dim, 1, 2.0e9, 1.0e6);
        sc.k_snapshots = k;
        sc.l_cells = l;
    }
    const SignalModel model = SignalModel::from_scenario(sc);
    Rng rng = trial_stream(seed, 17, 0);
    const DataSet ds = synthesize(model, amplitude_for_snr(snr_db), Hypothesis::h1, rng);
    return {ds.z, accumulate_gram(ds.training), model.steering, model.doppler};
}

CMatrix inv_sqrt(const CMatrix& s)
{
    Eigen::SelfAdjointEigenSolver<CMatrix> es(s);
    return es.eigenvectors() * es.eigenvalues().cwiseInverse().cwiseSqrt().asDiagonal() *
           es.eigenvectors().adjoint();
}

// Whitened forms with explicit inverses and the symmetric square root.
struct Oracle {
    double oglrt, tglrt, rao, lhamf;
};

Oracle whitened_oracle(const Fixture& f)
{
    const CMatrix w = inv_sqrt(f.s);
    const CMatrix zt = w * f.z;
    const CVector at = w * f.a;
    const Eigen::Index dim = f.a.size();
    const double e = f.omega.squaredNorm();
    const CVector zw = zt * f.omega.conjugate() / std::sqrt(e);
    const CMatrix p = complement_projection(f.omega.conjugate());
    const CMatrix id = CMatrix::Identity(dim, dim);
    const CMatrix ip = (id + zt * p * zt.adjoint()).inverse();
    const CMatrix iz = (id + zt * zt.adjoint()).inverse();
    Oracle o;
    o.oglrt = at.dot(ip * at).real() / at.dot(iz * at).real();
    o.tglrt = std::norm(at.dot(zw)) / at.squaredNorm();
    o.rao = std::norm(at.dot(iz * zw)) / at.dot(iz * at).real();
    o.lhamf = std::norm(at.dot(ip * zw)) / at.dot(ip * at).real();
    return o;
}

double rel(double x, double y)
{
    return std::abs(x - y) / std::max(std::abs(y), 1e-300);
}

} // namespace

TEST(DetectorNames, RoundTrip)
{
    for (DetectorKind k : kAllDetectors) EXPECT_EQ(parse_detector(to_string(k)), k);
    EXPECT_EQ(parse_detector("glrt_no"), DetectorKind::glrt_no);
    EXPECT_EQ(parse_detector("rao"), DetectorKind::rao);
    EXPECT_THROW(parse_detector("kelly"), ArgumentError);
    EXPECT_TRUE(uses_training(DetectorKind::lhamf));
    EXPECT_FALSE(uses_training(DetectorKind::wald_no));
}

TEST(ScalarFixture, Statistics)
{
    const Fixture f = scalar_fixture();
    EXPECT_NEAR(oglrt(f.z, f.s, f.a, f.omega), 4.0 / 3.0, 1e-14);
    EXPECT_NEAR(tglrt(f.z, f.s, f.a, f.omega), 0.5, 1e-14);
    EXPECT_NEAR(rao(f.z, f.s, f.a, f.omega), 0.25, 1e-14);
    EXPECT_NEAR(lhamf(f.z, f.s, f.a, f.omega), 1.0 / 3.0, 1e-14);
}

TEST(ScalarFixture, Decomposition)
{
    const Fixture f = scalar_fixture();
    const DetectionOutcome o = decomposition(f.z, f.s, f.a, f.omega);
    EXPECT_NEAR(o.lambda_prime, 0.25, 1e-14);
    EXPECT_NEAR(o.lambda_dprime, 1.0 / 3.0, 1e-14);
    EXPECT_NEAR(o.loss_b, 1.0, 1e-14);
    EXPECT_NEAR(o.rao, 0.25, 1e-14);
    EXPECT_NEAR(o.oglrt, 4.0 / 3.0, 1e-14);
    EXPECT_NEAR(decision_statistic(DetectorKind::oglrt, o), 1.0 / 3.0, 1e-14);
    EXPECT_THROW(decision_statistic(DetectorKind::rao_no, o), ArgumentError);
}

TEST(ScalarFixture, NoTrainingComparators)
{
    const Fixture f = scalar_fixture();
    EXPECT_NEAR(glrt_no(f.z, f.a, f.omega), 2.0, 1e-14);
    EXPECT_NEAR(rao_no(f.z, f.a, f.omega), 0.5, 1e-14);
    EXPECT_NEAR(wald_no(f.z, f.a, f.omega), 1.0, 1e-14);
}

TEST(ZeroData, NullStatistics)
{
    Fixture f = random_fixture(1);
    f.z.setZero();
    EXPECT_NEAR(oglrt(f.z, f.s, f.a, f.omega), 1.0, 1e-14);
    EXPECT_EQ(tglrt(f.z, f.s, f.a, f.omega), 0.0);
    EXPECT_EQ(rao(f.z, f.s, f.a, f.omega), 0.0);
    EXPECT_EQ(lhamf(f.z, f.s, f.a, f.omega), 0.0);
    const DetectionOutcome o = decomposition(f.z, f.s, f.a, f.omega);
    EXPECT_NEAR(o.lambda_prime, 0.0, 1e-14);
    EXPECT_NEAR(o.lambda_dprime, 0.0, 1e-14);
    EXPECT_THROW(rao_no(f.z, f.a, f.omega), ArgumentError);
}

TEST(Tglrt, NoiseFreeScaling)
{
    const Fixture f = random_fixture(2);
    const cd c(1.5, -0.5);
    const CMatrix z = c * f.a * f.omega.transpose();
    const CMatrix id = CMatrix::Identity(12, 12);
    const double expected = std::norm(c) * 6.0 * std::pow(f.a.squaredNorm(), 2) / f.a.squaredNorm();
    EXPECT_NEAR(tglrt(z, id, f.a, f.omega), expected, 1e-10 * expected);
    EXPECT_THROW(wald_no(z, f.a, f.omega), ArgumentError);
}

TEST(Detectors, MatchWhitenedOracle)
{
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Fixture f = random_fixture(seed);
        const Oracle o = whitened_oracle(f);
        EXPECT_LT(rel(oglrt(f.z, f.s, f.a, f.omega), o.oglrt), 1e-9);
        EXPECT_LT(rel(tglrt(f.z, f.s, f.a, f.omega), o.tglrt), 1e-9);
        EXPECT_LT(rel(rao(f.z, f.s, f.a, f.omega), o.rao), 1e-9);
        EXPECT_LT(rel(lhamf(f.z, f.s, f.a, f.omega), o.lhamf), 1e-9);
    }
}

TEST(Detectors, CholeskyWhiteningInvariance)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Fixture f = random_fixture(seed + 300);
        const CMatrix w = whiten_factor(f.s);
        const CMatrix id = CMatrix::Identity(12, 12);
        const CMatrix zt = w * f.z;
        const CVector at = w * f.a;
        EXPECT_LT(rel(oglrt(zt, id, at, f.omega), oglrt(f.z, f.s, f.a, f.omega)), 1e-9);
        EXPECT_LT(rel(tglrt(zt, id, at, f.omega), tglrt(f.z, f.s, f.a, f.omega)), 1e-9);
        EXPECT_LT(rel(rao(zt, id, at, f.omega), rao(f.z, f.s, f.a, f.omega)), 1e-9);
        EXPECT_LT(rel(lhamf(zt, id, at, f.omega), lhamf(f.z, f.s, f.a, f.omega)), 1e-9);
    }
}

TEST(Decomposition, IdentitiesOnRandomFixtures)
{
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const Fixture f = random_fixture(seed, 12, 6, 4, seed % 2 == 0 ? 0.0 : 12.0);
        const DetectionOutcome o = decomposition(f.z, f.s, f.a, f.omega);
        worst = std::max(worst, rel(o.oglrt, 1.0 / (1.0 - o.lambda_prime)));
        worst = std::max(worst, rel(o.lambda_dprime, o.lambda_prime / (1.0 - o.lambda_prime)));
        worst = std::max(worst, rel(o.rao * o.lhamf, o.lambda_prime * o.lambda_dprime));
        worst = std::max(worst, rel(o.rao, o.loss_b * o.lambda_dprime / (1.0 + o.lambda_dprime)));
        EXPECT_GE(o.lambda_prime, 0.0);
        EXPECT_LT(o.lambda_prime, 1.0);
        EXPECT_GE(o.oglrt, 1.0);
        EXPECT_GE(o.rao, 0.0);
        EXPECT_LT(o.rao, 1.0);
        EXPECT_LE(o.rao, o.lambda_dprime * (1 + 1e-12));
        EXPECT_GT(o.loss_b, 0.0);
        EXPECT_LE(o.loss_b, 1.0 + 1e-12);
    }
    EXPECT_LT(worst, 1e-9);
}

TEST(Detectors, LinearTransformInvariance)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Fixture f = random_fixture(seed + 700);
        Rng rng = trial_stream(seed, 5, 5);
        const CMatrix t = standard_complex_normal(12, 12, rng) + 3.0 * CMatrix::Identity(12, 12);
        const CMatrix s2 = t * f.s * t.adjoint();
        const CMatrix z2 = t * f.z;
        const CVector a2 = t * f.a;
        EXPECT_LT(rel(oglrt(z2, s2, a2, f.omega), oglrt(f.z, f.s, f.a, f.omega)), 1e-9);
        EXPECT_LT(rel(tglrt(z2, s2, a2, f.omega), tglrt(f.z, f.s, f.a, f.omega)), 1e-9);
        EXPECT_LT(rel(rao(z2, s2, a2, f.omega), rao(f.z, f.s, f.a, f.omega)), 1e-9);
        EXPECT_LT(rel(lhamf(z2, s2, a2, f.omega), lhamf(f.z, f.s, f.a, f.omega)), 1e-9);
    }
}

TEST(Detectors, DopplerPhaseInvariance)
{
    const Fixture f = random_fixture(42);
    const CVector w2 = std::polar(1.0, 1.1) * f.omega;
    EXPECT_LT(rel(oglrt(f.z, f.s, f.a, w2), oglrt(f.z, f.s, f.a, f.omega)), 1e-12);
    EXPECT_LT(rel(tglrt(f.z, f.s, f.a, w2), tglrt(f.z, f.s, f.a, f.omega)), 1e-12);
    EXPECT_LT(rel(rao(f.z, f.s, f.a, w2), rao(f.z, f.s, f.a, f.omega)), 1e-12);
    EXPECT_LT(rel(lhamf(f.z, f.s, f.a, w2), lhamf(f.z, f.s, f.a, f.omega)), 1e-12);
}

TEST(Detectors, ContinuousInAmplitude)
{
    const Scenario sc = Scenario::jamming_defaults(4, 6);
    const SignalModel model = SignalModel::from_scenario(sc);
    Rng r0 = trial_stream(8, 8, 8);
    const DataSet h0 = synthesize(model, Amplitude{}, Hypothesis::h0, r0);
    const CMatrix s = accumulate_gram(h0.training);
    const DetectionOutcome base = decomposition(h0.z, s, model.steering, model.doppler);
    Rng r1 = trial_stream(8, 8, 8);
    const DataSet tiny = synthesize(model, Amplitude{cd(1e-9, 0)}, Hypothesis::h1, r1);
    const DetectionOutcome near = decomposition(tiny.z, s, model.steering, model.doppler);
    EXPECT_NEAR(near.oglrt, base.oglrt, 1e-6);
    EXPECT_NEAR(near.tglrt, base.tglrt, 1e-6);
    EXPECT_NEAR(near.rao, base.rao, 1e-6);
    EXPECT_NEAR(near.lhamf, base.lhamf, 1e-6);
}

TEST(NoTraining, MatchesExplicitFormulas)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Fixture f = random_fixture(seed + 50, 3, 8, 2);
        const CMatrix p = complement_projection(f.omega.conjugate());
        const CMatrix gp = (f.z * p * f.z.adjoint()).inverse();
        const CMatrix gz = (f.z * f.z.adjoint()).inverse();
        const CVector zw = f.z * f.omega.conjugate() / std::sqrt(8.0);
        const double g = f.a.dot(gp * f.a).real() / f.a.dot(gz * f.a).real();
        const double r = std::norm(f.a.dot(gz * zw)) / f.a.dot(gz * f.a).real();
        const double w = std::norm(f.a.dot(gp * zw)) / f.a.dot(gp * f.a).real();
        EXPECT_LT(rel(glrt_no(f.z, f.a, f.omega), g), 1e-9);
        EXPECT_LT(rel(rao_no(f.z, f.a, f.omega), r), 1e-9);
        EXPECT_LT(rel(wald_no(f.z, f.a, f.omega), w), 1e-9);
        EXPECT_GT(glrt_no(f.z, f.a, f.omega, GlrtNoForm::whitened), 0.0);
    }
}

TEST(NoTraining, NeedsMoreSnapshotsThanDimension)
{
    const Fixture f = random_fixture(3);
    EXPECT_THROW(glrt_no(f.z, f.a, f.omega), ArgumentError);
    EXPECT_THROW(rao_no(f.z, f.a, f.omega), ArgumentError);
    EXPECT_THROW(wald_no(f.z, f.a, f.omega), ArgumentError);
}

TEST(Noncentrality, Values)
{
    const CVector a = CVector::Ones(12);
    const CVector w = doppler_vector(0.2, 6).values;
    EXPECT_EQ(noncentrality_alpha(cd(0, 0), w, a, CMatrix::Identity(12, 12)), 0.0);
    EXPECT_NEAR(noncentrality_alpha(cd(1, 0), w, a, CMatrix::Identity(12, 12)), 72.0, 1e-12);
    EXPECT_NEAR(noncentrality_alpha(cd(0, 3), w, a, CMatrix::Identity(12, 12)), 9.0 * 72.0, 1e-10);
    EXPECT_EQ(doppler_energy(w), 6.0);
}
