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

#include "fdamimo/steering.hpp"

#include <cmath>
#include <string>

namespace fdamimo {

namespace {

CVector phase_ramp(Eigen::Index n, double cycles_per_element)
{
    CVector v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        v(i) = std::polar(1.0, 2.0 * kPi * cycles_per_element * static_cast<double>(i));
    }
    return v;
}

} // namespace

void ArrayConfig::validate() const
{
    if (m_tx < 1) throw ArgumentError("array.m: transmit element count must be >= 1");
    if (n_rx < 1) throw ArgumentError("array.n: receive element count must be >= 1");
    if (!(f0 > 0.0) || !std::isfinite(f0)) throw ArgumentError("array.f0_hz: carrier must be positive");
    if (!(delta_f >= 0.0) || !std::isfinite(delta_f)) throw ArgumentError("array.delta_f_hz: frequency offset must be >= 0");
    if (!(d_t > 0.0)) throw ArgumentError("array.d_t_m: transmit spacing must be positive");
    if (!(d_r > 0.0)) throw ArgumentError("array.d_r_m: receive spacing must be positive");
    if (!(c > 0.0)) throw ArgumentError("array.c: propagation speed must be positive");
}

ArrayConfig ArrayConfig::half_wavelength(int m_tx, int n_rx, double f0, double delta_f)
{
    ArrayConfig cfg;
    cfg.m_tx = m_tx;
    cfg.n_rx = n_rx;
    cfg.f0 = f0;
    cfg.delta_f = delta_f;
    cfg.d_t = cfg.c / (2.0 * f0);
    cfg.d_r = cfg.d_t;
    return cfg;
}

double carrier_frequency(int m, const ArrayConfig& cfg)
{
    if (m < 1 || m > cfg.m_tx) {
        throw ArgumentError("carrier_frequency: element index " + std::to_string(m) + " outside [1, " +
                            std::to_string(cfg.m_tx) + "]");
    }
    return cfg.f0 + static_cast<double>(m - 1) * cfg.delta_f;
}

SteeringVector receive_steering(double theta, const ArrayConfig& cfg)
{
    if (!(std::abs(theta) < kPi / 2.0)) throw ArgumentError("receive_steering: |theta| must be < pi/2");
    return {phase_ramp(cfg.n_rx, cfg.d_r * std::sin(theta) / cfg.wavelength())};
}

SteeringVector transmit_angle_steering(double theta, const ArrayConfig& cfg)
{
    if (!(std::abs(theta) < kPi / 2.0)) throw ArgumentError("transmit_steering: |theta| must be < pi/2");
    return {phase_ramp(cfg.m_tx, cfg.d_t * std::sin(theta) / cfg.wavelength())};
}

SteeringVector range_phase(double r, const ArrayConfig& cfg)
{
    // Reduce the per-element phase modulo one cycle first; 2r delta_f / c is
    // O(100) cycles at operational ranges.
    const double cycles = cfg.delta_f * 2.0 * r / cfg.c;
    return {phase_ramp(cfg.m_tx, cycles - std::floor(cycles))};
}

SteeringVector transmit_steering(double r, double theta, const ArrayConfig& cfg)
{
    if (!(r >= 0.0)) throw ArgumentError("transmit_steering: range must be >= 0");
    SteeringVector at = transmit_angle_steering(theta, cfg);
    at.values.array() *= range_phase(-r, cfg).values.array();
    return at;
}

SteeringVector joint_steering(double r, double theta, const ArrayConfig& cfg)
{
    const CVector at = transmit_steering(r, theta, cfg).values;
    const CVector ar = receive_steering(theta, cfg).values;
    CVector out(at.size() * ar.size());
    for (Eigen::Index m = 0; m < at.size(); ++m) {
        out.segment(m * ar.size(), ar.size()) = at(m) * ar;
    }
    return {std::move(out)};
}

DopplerVector doppler_vector(double f_d, int k_snapshots)
{
    if (k_snapshots < 1) throw ArgumentError("doppler_vector: k_snapshots must be >= 1");
    return {phase_ramp(k_snapshots, f_d), f_d};
}

CMatrix complement_projection(const CVector& v)
{
    const double nrm2 = v.squaredNorm();
    if (!(nrm2 > 0.0)) throw ArgumentError("complement_projection: zero vector");
    CMatrix p = -(v * v.adjoint()) / nrm2;
    p.diagonal().array() += 1.0;
    return p;
}

double deg_to_rad(double deg) { return deg * kPi / 180.0; }

} // namespace fdamimo
