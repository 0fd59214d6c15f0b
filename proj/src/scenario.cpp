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

#include "fdamimo/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fdamimo/numerics.hpp"

namespace fdamimo {

Jammer Jammer::deceptive(double range, double angle, double jnr_db)
{
    return {JammerKind::deceptive, range, angle, jnr_db};
}

Jammer Jammer::suppressive(double angle, double jnr_db) { return {JammerKind::suppressive, 0.0, angle, jnr_db}; }

void Scenario::validate() const
{
    array.validate();
    if (k_snapshots < 1) throw ArgumentError("waveform.k_snapshots: must be >= 1");
    if (l_cells < 1) throw ArgumentError("training.l_cells: must be >= 1");
    if (static_cast<long>(l_cells) * k_snapshots <= dim()) {
        throw ArgumentError("training.l_cells: need L*K > M*N (L*K = " + std::to_string(l_cells * k_snapshots) +
                            ", M*N = " + std::to_string(dim()) + ")");
    }
    if (!(noise_power > 0.0) || !std::isfinite(noise_power)) throw ArgumentError("noise_power: must be positive");
    for (std::size_t i = 0; i < jammers.size(); ++i) {
        if (!std::isfinite(jammers[i].jnr_db)) {
            throw ArgumentError("jammers[" + std::to_string(i) + "].jnr_db: must be finite");
        }
    }
    if (!(target_range >= 0.0)) throw ArgumentError("target.range_m: must be >= 0");
}

Scenario Scenario::jamming_defaults(int l_cells, int k_snapshots)
{
    Scenario sc;
    sc.array = ArrayConfig::half_wavelength(4, 3, 2.0e9, 1.0e6);
    sc.l_cells = l_cells;
    sc.k_snapshots = k_snapshots;
    sc.target_range = 15.12e3;
    sc.target_angle = deg_to_rad(30.0);
    sc.f_d = 0.2;
    sc.jammers = {Jammer::deceptive(15.165e3, deg_to_rad(30.0), 20.0),
                  Jammer::deceptive(30.48e3, deg_to_rad(28.0), 20.0),
                  Jammer::suppressive(deg_to_rad(-20.0), 30.0)};
    return sc;
}

CMatrix build_covariance(const Scenario& sc)
{
    const int dim = sc.dim();
    const int m = sc.array.m_tx;
    CMatrix r = CMatrix::Identity(dim, dim);
    for (const Jammer& j : sc.jammers) {
        const double power = std::pow(10.0, j.jnr_db / 10.0);
        if (j.kind == JammerKind::deceptive) {
            const CVector a = joint_steering(j.range, j.angle, sc.array).values;
            r.noalias() += power * (a * a.adjoint());
        } else {
            const CVector ar = receive_steering(j.angle, sc.array).values;
            const CMatrix block = power * (ar * ar.adjoint());
            const Eigen::Index n = ar.size();
            for (int p = 0; p < m; ++p) {
                for (int q = 0; q < m; ++q) r.block(p * n, q * n, n, n) += block;
            }
        }
    }
    r *= sc.noise_power;
    // Remove rounding asymmetry so downstream Hermitian checks are exact.
    return 0.5 * (r + r.adjoint());
}

Amplitude amplitude_for_snr(double snr_db, double noise_power, double phase)
{
    if (!(noise_power > 0.0)) throw ArgumentError("amplitude_for_snr: noise_power must be positive");
    if (snr_db == -std::numeric_limits<double>::infinity()) return {};
    return {std::polar(std::sqrt(noise_power * std::pow(10.0, snr_db / 10.0)), phase)};
}

SignalModel SignalModel::from_parts(CMatrix covariance, CVector steering, CVector doppler, int l_cells)
{
    if (covariance.rows() != covariance.cols() || covariance.rows() != steering.size()) {
        throw ArgumentError("SignalModel: covariance and steering dimensions disagree");
    }
    if (l_cells < 1) throw ArgumentError("SignalModel: l_cells must be >= 1");
    SignalModel model;
    const auto llt = hermitian_factor(covariance, "SignalModel covariance");
    model.color = llt.matrixL();
    model.covariance = std::move(covariance);
    model.steering = std::move(steering);
    model.doppler = std::move(doppler);
    model.l_cells = l_cells;
    return model;
}

SignalModel SignalModel::from_scenario(const Scenario& sc)
{
    sc.validate();
    return from_parts(build_covariance(sc), joint_steering(sc.target_range, sc.target_angle, sc.array).values,
                      doppler_vector(sc.f_d, sc.k_snapshots).values, sc.l_cells);
}

DataSet synthesize(const SignalModel& model, Amplitude xi, Hypothesis hyp, Rng& rng)
{
    const Eigen::Index dim = model.dim();
    const Eigen::Index k = model.k_snapshots();
    const auto lower = model.color.triangularView<Eigen::Lower>();
    DataSet ds;
    ds.z = lower * standard_complex_normal(dim, k, rng);
    if (hyp == Hypothesis::h1 && xi.xi != cd(0.0, 0.0)) {
        ds.z.noalias() += xi.xi * (model.steering * model.doppler.transpose());
    }
    ds.training.reserve(model.l_cells);
    for (int l = 0; l < model.l_cells; ++l) {
        ds.training.emplace_back(lower * standard_complex_normal(dim, k, rng));
    }
    return ds;
}

DataSet synthesize(const Scenario& sc, Amplitude xi, Hypothesis hyp, Rng& rng)
{
    return synthesize(SignalModel::from_scenario(sc), xi, hyp, rng);
}

double cos2_spatial(const CVector& actual, const CVector& nominal, const CMatrix& covariance)
{
    if (actual.size() != nominal.size() || covariance.rows() != actual.size()) {
        throw ArgumentError("cos2_spatial: dimension mismatch");
    }
    if (actual.squaredNorm() == 0.0 || nominal.squaredNorm() == 0.0) {
        throw ArgumentError("cos2_spatial: zero vector");
    }
    const auto llt = hermitian_factor(covariance, "cos2_spatial");
    const CVector ra = llt.solve(actual);
    const CVector rn = llt.solve(nominal);
    const double aa = actual.dot(ra).real();
    const double nn = nominal.dot(rn).real();
    const double c2 = std::norm(actual.dot(rn)) / (aa * nn);
    return std::clamp(c2, 0.0, 1.0);
}

double cos2_doppler(double f_d_actual, double f_d_nominal, int k_snapshots)
{
    const CVector wa = doppler_vector(f_d_actual, k_snapshots).values;
    const CVector wn = doppler_vector(f_d_nominal, k_snapshots).values;
    const double c2 = std::norm(wn.dot(wa)) / (wn.squaredNorm() * wa.squaredNorm());
    return std::clamp(c2, 0.0, 1.0);
}

CVector make_mismatched_steering(const CVector& nominal, double cos2_target, const CMatrix& covariance)
{
    if (!(cos2_target > 0.0 && cos2_target <= 1.0)) {
        throw ArgumentError("make_mismatched_steering: cos2_target must lie in (0, 1]");
    }
    const auto llt = hermitian_factor(covariance, "make_mismatched_steering");
    auto inner = [&](const CVector& x, const CVector& y) { return x.dot(llt.solve(y)); };  // x^H R^-1 y

    const CVector u = nominal / std::sqrt(inner(nominal, nominal).real());
    const double cos_phi = std::sqrt(cos2_target);
    if (cos2_target == 1.0) return u;
    const double sin_phi = std::sqrt(1.0 - cos2_target);

    for (Eigen::Index i = 0; i < nominal.size(); ++i) {
        CVector e = CVector::Zero(nominal.size());
        e(i) = 1.0;
        const CVector w = e - u * inner(u, e);
        const double w2 = inner(w, w).real();
        if (w2 > 1e-8 * inner(e, e).real()) {
            return cos_phi * u + sin_phi * (w / std::sqrt(w2));
        }
    }
    throw ArgumentError("make_mismatched_steering: dimension 1 admits no mismatched direction");
}

double find_mismatched_doppler(double f_d_nominal, double cos2_target, int k_snapshots)
{
    if (!(cos2_target > 0.0 && cos2_target <= 1.0)) {
        throw ArgumentError("find_mismatched_doppler: cos2_target must lie in (0, 1]");
    }
    if (k_snapshots < 2) throw ArgumentError("find_mismatched_doppler: need K >= 2");
    if (cos2_target == 1.0) return f_d_nominal;
    // |Dirichlet kernel|^2 / K^2 decreases monotonically from 1 to 0 on [0, 1/K].
    auto g = [&](double delta) { return cos2_doppler(f_d_nominal + delta, f_d_nominal, k_snapshots) - cos2_target; };
    double lo = 0.0;
    double hi = 1.0 / k_snapshots;
    if (!(g(lo) > 0.0 && g(hi) <= 1e-15)) throw NumericError("find_mismatched_doppler: no root in bracket");
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) > 0.0 ? lo : hi) = mid;
    }
    return f_d_nominal + 0.5 * (lo + hi);
}

} // namespace fdamimo
