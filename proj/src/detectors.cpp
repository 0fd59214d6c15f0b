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

#include "fdamimo/detectors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "fdamimo/numerics.hpp"

namespace fdamimo {

namespace {

void check_dims(const CMatrix& z, const CVector& a, const CVector& omega, const char* who)
{
    if (z.rows() != a.size() || z.cols() != omega.size()) {
        throw ArgumentError(std::string(who) + ": Z must be size(a) x size(omega)");
    }
    if (omega.squaredNorm() == 0.0) throw ArgumentError(std::string(who) + ": zero Doppler vector");
}

void check_training(const CMatrix& s, const CVector& a, const char* who)
{
    if (s.rows() != a.size() || s.cols() != a.size()) throw ArgumentError(std::string(who) + ": S must be MN x MN");
}

// Z w* / sqrt(w^T w*) and Z P, with P the projector orthogonal to w*.
struct DopplerSplit {
    CVector z_w;
    CMatrix z_perp;
};

DopplerSplit split_doppler(const CMatrix& z, const CVector& omega)
{
    const double root_e = std::sqrt(doppler_energy(omega));
    DopplerSplit out;
    out.z_w = z * omega.conjugate() / root_e;
    out.z_perp = z - out.z_w * omega.transpose() / root_e;
    return out;
}

// a^H G^-1 a, a^H G^-1 x and x^H G^-1 x from one factorization.
struct QuadForms {
    double aa;
    cd ax;
    double xx;
};

QuadForms quad_forms(const Eigen::LLT<CMatrix>& g, const CVector& a, const CVector& x)
{
    const CVector ga = g.solve(a);
    const CVector gx = g.solve(x);
    return {a.dot(ga).real(), a.dot(gx), x.dot(gx).real()};
}

CMatrix plus_gram(const CMatrix& s, const CMatrix& y)
{
    CMatrix g = s;
    g.noalias() += y * y.adjoint();
    return g;
}

Eigen::LLT<CMatrix> training_factor(const CMatrix& g, const char* who)
{
    return hermitian_factor(g, who);
}

Eigen::LLT<CMatrix> data_only_factor(const CMatrix& g, const char* who)
{
    try {
        return hermitian_factor(g, who);
    } catch (const NumericError& e) {
        throw ArgumentError(std::string(e.what()) + " (training-free detectors need K > MN noisy snapshots)");
    }
}

void check_no_training(const CMatrix& z, const CVector& a, const CVector& omega, const char* who)
{
    check_dims(z, a, omega, who);
    if (z.cols() <= z.rows()) {
        throw ArgumentError(std::string(who) + ": need K > MN (K = " + std::to_string(z.cols()) +
                            ", MN = " + std::to_string(z.rows()) + ")");
    }
}

std::string normalize(std::string_view name)
{
    std::string out;
    for (const char ch : name) out.push_back(ch == '_' ? '-' : static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    return out;
}

} // namespace

std::string_view to_string(DetectorKind kind)
{
    switch (kind) {
    case DetectorKind::oglrt: return "OGLRT";
    case DetectorKind::tglrt: return "TGLRT";
    case DetectorKind::rao: return "Rao";
    case DetectorKind::lhamf: return "LHAMF";
    case DetectorKind::glrt_no: return "GLRT-no";
    case DetectorKind::rao_no: return "Rao-no";
    case DetectorKind::wald_no: return "Wald-no";
    }
    return "?";
}

DetectorKind parse_detector(std::string_view name)
{
    const std::string key = normalize(name);
    for (const DetectorKind k : kAllDetectors) {
        if (normalize(to_string(k)) == key) return k;
    }
    throw ArgumentError("unknown detector '" + std::string(name) + "'");
}

bool uses_training(DetectorKind kind)
{
    return kind == DetectorKind::oglrt || kind == DetectorKind::tglrt || kind == DetectorKind::rao ||
           kind == DetectorKind::lhamf;
}

double doppler_energy(const CVector& omega)
{
    const bool unit = (omega.array().abs() - 1.0).abs().maxCoeff() < 1e-12;
    return unit ? static_cast<double>(omega.size()) : omega.squaredNorm();
}

double oglrt(const CMatrix& z, const CMatrix& s, const CVector& a, const CVector& omega)
{
    check_dims(z, a, omega, "oglrt");
    check_training(s, a, "oglrt");
    const DopplerSplit d = split_doppler(z, omega);
    const auto plus = training_factor(plus_gram(s, d.z_perp), "oglrt S_+");
    const auto full = training_factor(plus_gram(s, z), "oglrt S + ZZ^H");
    return a.dot(plus.solve(a)).real() / a.dot(full.solve(a)).real();
}

double tglrt(const CMatrix& z, const CMatrix& s, const CVector& a, const CVector& omega)
{
    check_dims(z, a, omega, "tglrt");
    check_training(s, a, "tglrt");
    const DopplerSplit d = split_doppler(z, omega);
    const QuadForms q = quad_forms(training_factor(s, "tglrt S"), a, d.z_w);
    return std::norm(q.ax) / q.aa;
}

double rao(const CMatrix& z, const CMatrix& s, const CVector& a, const CVector& omega)
{
    check_dims(z, a, omega, "rao");
    check_training(s, a, "rao");
    const DopplerSplit d = split_doppler(z, omega);
    const QuadForms q = quad_forms(training_factor(plus_gram(s, z), "rao S + ZZ^H"), a, d.z_w);
    return std::norm(q.ax) / q.aa;
}

double lhamf(const CMatrix& z, const CMatrix& s, const CVector& a, const CVector& omega)
{
    check_dims(z, a, omega, "lhamf");
    check_training(s, a, "lhamf");
    const DopplerSplit d = split_doppler(z, omega);
    const QuadForms q = quad_forms(training_factor(plus_gram(s, d.z_perp), "lhamf S_+"), a, d.z_w);
    return std::norm(q.ax) / q.aa;
}

DetectionOutcome decomposition(const CMatrix& z, const CMatrix& s, const CVector& a, const CVector& omega)
{
    check_dims(z, a, omega, "decomposition");
    check_training(s, a, "decomposition");
    const DopplerSplit d = split_doppler(z, omega);

    const QuadForms qs = quad_forms(training_factor(s, "decomposition S"), a, d.z_w);
    const QuadForms qp = quad_forms(training_factor(plus_gram(s, d.z_perp), "decomposition S_+"), a, d.z_w);
    const QuadForms qf = quad_forms(training_factor(plus_gram(s, z), "decomposition S + ZZ^H"), a, d.z_w);

    DetectionOutcome out;
    out.tglrt = std::norm(qs.ax) / qs.aa;
    out.lhamf = std::norm(qp.ax) / qp.aa;
    out.rao = std::norm(qf.ax) / qf.aa;
    out.oglrt = qp.aa / qf.aa;
    out.lambda_prime = out.lhamf / (1.0 + qp.xx);
    if (!(out.lambda_prime < 1.0)) throw NumericError("decomposition: lambda' >= 1");
    // 1 + z^H S_+^-1 z - lhamf >= 1 by Cauchy-Schwarz.
    const double denom = 1.0 + qp.xx - out.lhamf;
    out.lambda_dprime = out.lhamf / denom;
    out.loss_b = 1.0 / denom;
    return out;
}

double glrt_no(const CMatrix& z, const CVector& a, const CVector& omega, GlrtNoForm form)
{
    check_no_training(z, a, omega, "glrt_no");
    const DopplerSplit d = split_doppler(z, omega);
    const auto perp = data_only_factor(d.z_perp * d.z_perp.adjoint(), "glrt_no Z P Z^H");
    const double num = a.dot(perp.solve(a)).real();
    if (form == GlrtNoForm::plain) {
        const auto full = data_only_factor(z * z.adjoint(), "glrt_no Z Z^H");
        return num / a.dot(full.solve(a)).real();
    }
    CMatrix zt = z;
    perp.matrixL().solveInPlace(zt);
    const auto full = data_only_factor(zt * zt.adjoint(), "glrt_no Zt Zt^H");
    return num / a.dot(full.solve(a)).real();
}

double rao_no(const CMatrix& z, const CVector& a, const CVector& omega)
{
    check_no_training(z, a, omega, "rao_no");
    const DopplerSplit d = split_doppler(z, omega);
    const QuadForms q = quad_forms(data_only_factor(z * z.adjoint(), "rao_no Z Z^H"), a, d.z_w);
    return std::norm(q.ax) / q.aa;
}

double wald_no(const CMatrix& z, const CVector& a, const CVector& omega)
{
    check_no_training(z, a, omega, "wald_no");
    const DopplerSplit d = split_doppler(z, omega);
    const QuadForms q = quad_forms(data_only_factor(d.z_perp * d.z_perp.adjoint(), "wald_no Z P Z^H"), a, d.z_w);
    return std::norm(q.ax) / q.aa;
}

double noncentrality_alpha(cd xi, const CVector& omega, const CVector& a, const CMatrix& r)
{
    if (r.rows() != a.size()) throw ArgumentError("noncentrality_alpha: R must be size(a) x size(a)");
    const auto llt = hermitian_factor(r, "noncentrality_alpha");
    return std::norm(xi) * doppler_energy(omega) * a.dot(llt.solve(a)).real();
}

double decision_statistic(DetectorKind kind, const DetectionOutcome& o)
{
    switch (kind) {
    case DetectorKind::oglrt: return o.lambda_dprime;
    case DetectorKind::tglrt: return o.tglrt;
    case DetectorKind::rao: return o.rao;
    case DetectorKind::lhamf: return o.lhamf;
    default: break;
    }
    throw ArgumentError("decision_statistic: " + std::string(to_string(kind)) + " does not use training data");
}

} // namespace fdamimo
