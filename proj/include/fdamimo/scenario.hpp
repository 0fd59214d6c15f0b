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

#ifndef FDAMIMO_SCENARIO_HPP
#define FDAMIMO_SCENARIO_HPP

#include <vector>

#include "fdamimo/rng.hpp"
#include "fdamimo/steering.hpp"

namespace fdamimo {

enum class JammerKind { deceptive, suppressive };

struct Jammer {
    JammerKind kind = JammerKind::deceptive;
    double range = 0.0;   // m, deceptive only
    double angle = 0.0;   // rad
    double jnr_db = 0.0;

    static Jammer deceptive(double range, double angle, double jnr_db);
    static Jammer suppressive(double angle, double jnr_db);
};

struct Scenario {
    ArrayConfig array;
    int k_snapshots = 6;
    int l_cells = 4;
    double noise_power = 1.0;
    std::vector<Jammer> jammers;
    double target_range = 15.12e3;
    double target_angle = 30.0 * kPi / 180.0;
    double f_d = 0.2;

    int dim() const { return array.joint_dim(); }

    // Enforces L*K > MN, noise_power > 0 and the array invariants.
    void validate() const;

    // The simulation setup: M=4, N=3, f0=2 GHz, delta_f=1 MHz, f_d=0.2,
    // target at (15.12 km, 30 deg), deceptive jammers at (15.165 km, 30 deg)
    // and (30.48 km, 28 deg) with 20 dB JNR each, and a 30 dB suppressive
    // jammer at -20 deg.
    static Scenario jamming_defaults(int l_cells, int k_snapshots);
};

// R = s2 (sum_d s2_d a_d a_d^H + sum_u s2_u (1_{MxM} kron a_R a_R^H) + I).
CMatrix build_covariance(const Scenario& sc);

struct Amplitude {
    cd xi{0.0, 0.0};
};

// |xi|^2 = noise_power 10^(snr_db/10); snr_db = -inf gives xi = 0.
Amplitude amplitude_for_snr(double snr_db, double noise_power = 1.0, double phase = 0.0);

enum class Hypothesis { h0, h1 };

struct DataSet {
    CMatrix z;                      // MN x K cell under test
    std::vector<CMatrix> training;  // L matrices, MN x K
};

// Everything a trial needs, prepared once: the noise colouring factor and the
// signal actually present in the data (which may differ from the nominal
// vectors the detectors assume).
struct SignalModel {
    CMatrix covariance;
    CMatrix color;  // lower Cholesky factor of covariance
    CVector steering;
    CVector doppler;
    int l_cells = 0;

    int dim() const { return static_cast<int>(covariance.rows()); }
    int k_snapshots() const { return static_cast<int>(doppler.size()); }

    static SignalModel from_scenario(const Scenario& sc);
    static SignalModel from_parts(CMatrix covariance, CVector steering, CVector doppler, int l_cells);
};

// Z = xi a w^T + N under H1, Z = N under H0; training is pure noise. Noise
// columns are color * g with g ~ CN(0, I). Draw order: Z noise, then Z_1..Z_L.
DataSet synthesize(const SignalModel& model, Amplitude xi, Hypothesis hyp, Rng& rng);
DataSet synthesize(const Scenario& sc, Amplitude xi, Hypothesis hyp, Rng& rng);

// Generalized cosine squared between two spatial vectors in the R^{-1} inner
// product: |a^H R^-1 a0|^2 / ((a^H R^-1 a)(a0^H R^-1 a0)).
double cos2_spatial(const CVector& actual, const CVector& nominal, const CMatrix& covariance);

// |w(f0)^H w(f)|^2 / (||w(f0)||^2 ||w(f)||^2).
double cos2_doppler(double f_d_actual, double f_d_nominal, int k_snapshots);

// Vector whose generalized cosine squared with `nominal` equals cos2_target.
// The result has unit R^{-1} norm; the complementary direction is the first
// canonical basis vector not parallel to `nominal`, orthogonalized.
CVector make_mismatched_steering(const CVector& nominal, double cos2_target, const CMatrix& covariance);

// Doppler f_d_nominal + delta with delta in [0, 1/K) chosen by bisection so
// that cos2_doppler equals cos2_target.
double find_mismatched_doppler(double f_d_nominal, double cos2_target, int k_snapshots);

} // namespace fdamimo

#endif
