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

#ifndef FDAMIMO_NUMERICS_HPP
#define FDAMIMO_NUMERICS_HPP

#include <functional>
#include <span>
#include <vector>

#include "fdamimo/types.hpp"

namespace fdamimo {

// ---------------------------------------------------------------------------
// Hermitian linear algebra
// ---------------------------------------------------------------------------

// S = sum_l Z_l Z_l^H. Requires the total column count to exceed the row
// count (ArgumentError otherwise) and rejects numerically singular results
// (condition number above 1e14) with NumericError.
CMatrix sample_covariance(std::span<const CMatrix> training);

// Same sum without the conditioning check, for the Monte Carlo inner loop
// (singular results still fail at factorization time).
CMatrix accumulate_gram(std::span<const CMatrix> training);

// Lower Cholesky factor of a Hermitian PD matrix; NumericError when not PD.
// `what` is prefixed to the error message.
Eigen::LLT<CMatrix> hermitian_factor(const CMatrix& s, const char* what);

// W = L^{-1} with S = L L^H, so that W^H W = S^{-1}.
CMatrix whiten_factor(const CMatrix& s);

bool is_hermitian(const CMatrix& m, double rel_tol = 1e-10);

// 2-norm condition number from the Hermitian eigenvalues.
double condition_number(const CMatrix& s);

// ---------------------------------------------------------------------------
// Special functions
// ---------------------------------------------------------------------------

// IG_{iota+1}(h) = exp(-h) sum_{j=0}^{iota} h^j / j!, the upper regularized
// incomplete gamma function at integer order iota + 1.
double incomplete_gamma(int iota, double h);
double log_incomplete_gamma(int iota, double h);

// ln C(n, k) via lgamma.
double log_binomial(int n, int k);

// Loss-factor density B^mm (1-B)^(mn-2) / beta(mm+1, mn-1) on [0, 1]. Requires
// mn >= 2; the mn == 1 case is a point mass at B = 1 and has no density.
double loss_factor_pdf(double b, int mm, int mn);
double log_loss_factor_pdf(double b, int mm, int mn);

// ln(exp(a) + exp(b)) without overflow.
double log_add_exp(double a, double b);

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

struct QuadratureOptions {
    double tol = 1e-9;
    int min_nodes = 16;
    int max_nodes = 1 << 14;
};

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Integral of f over [lo, hi] (default the unit interval) with Gauss-Legendre
// node doubling until two successive estimates agree within tol. Throws
// NumericError when max_nodes is reached first.
double integrate_unit_interval(const std::function<double(double)>& f, QuadratureOptions opts = {},
                               double lo = 0.0, double hi = 1.0);

} // namespace fdamimo

#endif
