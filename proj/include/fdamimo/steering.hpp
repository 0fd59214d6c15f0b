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

#ifndef FDAMIMO_STEERING_HPP
#define FDAMIMO_STEERING_HPP

#include "fdamimo/types.hpp"

namespace fdamimo {

// Colocated FDA-MIMO geometry: M transmit elements with a linear carrier
// offset, N receive elements. delta_f == 0 gives a conventional MIMO array.
struct ArrayConfig {
    int m_tx = 4;
    int n_rx = 3;
    double f0 = 2.0e9;       // Hz
    double delta_f = 1.0e6;  // Hz
    double d_t = kSpeedOfLight / (2.0 * 2.0e9);  // m
    double d_r = kSpeedOfLight / (2.0 * 2.0e9);  // m
    double c = kSpeedOfLight;

    double wavelength() const { return c / f0; }
    int joint_dim() const { return m_tx * n_rx; }

    // Throws ArgumentError naming the offending field.
    void validate() const;

    // Half-wavelength spacing at the given carrier.
    static ArrayConfig half_wavelength(int m_tx, int n_rx, double f0, double delta_f);
};

// Pure-phase spatial vector: a_R (length N), a_T (length M) or a_TR (length MN).
struct SteeringVector {
    CVector values;

    Eigen::Index size() const { return values.size(); }
};

// Slow-time Doppler vector, entry k = exp(j 2 pi f_d k), k = 0..K-1.
struct DopplerVector {
    CVector values;
    double f_d = 0.0;

    Eigen::Index size() const { return values.size(); }
};

// f_m = f0 + (m - 1) delta_f, m in [1, M].
double carrier_frequency(int m, const ArrayConfig& cfg);

// Entry n = exp(j 2 pi n d_R sin(theta) / lambda0), n = 0..N-1. |theta| < pi/2.
SteeringVector receive_steering(double theta, const ArrayConfig& cfg);

// Transmit angle factor a_t, entry m = exp(j 2 pi m d_T sin(theta) / lambda0).
SteeringVector transmit_angle_steering(double theta, const ArrayConfig& cfg);

// Range phase e(r), entry m = exp(j 2 pi m delta_f 2r / c).
SteeringVector range_phase(double r, const ArrayConfig& cfg);

// a_T(r, theta) = a_t(theta) .* e(-r).
SteeringVector transmit_steering(double r, double theta, const ArrayConfig& cfg);

// a_TR = a_T(r, theta) kron a_R(theta), length MN.
SteeringVector joint_steering(double r, double theta, const ArrayConfig& cfg);

DopplerVector doppler_vector(double f_d, int k_snapshots);

// I - v (v^H v)^{-1} v^H. Throws ArgumentError for a zero vector.
CMatrix complement_projection(const CVector& v);

double deg_to_rad(double deg);

} // namespace fdamimo

#endif
