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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fdamimo/analysis.hpp"
#include "fdamimo/detectors.hpp"
#include "fdamimo/experiments.hpp"
#include "fdamimo/steering.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace fdamimo;

namespace {

DofConvention parse_dof(const std::string& name)
{
    if (name == "exact") return DofConvention::exact;
    if (name == "printed") return DofConvention::printed;
    throw ArgumentError("dof: expected 'exact' or 'printed', got '" + name + "'");
}

py::dict run(const std::string& subcommand, const std::string& config_json, std::optional<std::uint64_t> seed,
             std::optional<double> pfa, std::optional<unsigned> workers)
{
    const Subcommand cmd = parse_subcommand(subcommand);
    ExperimentConfig cfg = parse_config(config_json, Overrides{seed, pfa, workers});
    ExperimentResult res;
    {
        py::gil_scoped_release release;
        res = run_experiment(cmd, std::move(cfg));
    }
    return py::dict("csv"_a = res.csv, "manifest"_a = res.manifest, "summary"_a = res.summary,
                    "exit_code"_a = res.exit_code);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "FDA-MIMO adaptive detection core";

    py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
    py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

    m.def(
        "joint_steering",
        [](double range_m, double angle_deg, int m_tx, int n_rx, double f0, double delta_f) {
            const ArrayConfig cfg = ArrayConfig::half_wavelength(m_tx, n_rx, f0, delta_f);
            return CVector(joint_steering(range_m, deg_to_rad(angle_deg), cfg).values);
        },
        "range_m"_a, "angle_deg"_a, "m_tx"_a = 4, "n_rx"_a = 3, "f0"_a = 2.0e9, "delta_f"_a = 1.0e6);
    m.def(
        "doppler_vector", [](double f_d, int k) { return CVector(doppler_vector(f_d, k).values); }, "f_d"_a,
        "k_snapshots"_a);

    m.def(
        "statistics",
        [](const CMatrix& z, const CMatrix& s, const CVector& a, const CVector& omega) {
            const DetectionOutcome o = decomposition(z, s, a, omega);
            return py::dict("oglrt"_a = o.oglrt, "tglrt"_a = o.tglrt, "rao"_a = o.rao, "lhamf"_a = o.lhamf,
                            "lambda_prime"_a = o.lambda_prime, "lambda_dprime"_a = o.lambda_dprime,
                            "loss_b"_a = o.loss_b);
        },
        "z"_a, "s"_a, "a"_a, "omega"_a);
    m.def("glrt_no", [](const CMatrix& z, const CVector& a, const CVector& w) { return glrt_no(z, a, w); }, "z"_a,
          "a"_a, "omega"_a);
    m.def("rao_no", &rao_no, "z"_a, "a"_a, "omega"_a);
    m.def("wald_no", &wald_no, "z"_a, "a"_a, "omega"_a);

    m.def(
        "threshold",
        [](const std::string& det, double pfa, int l, int k, int mn, const std::string& dof) {
            return closed_form_threshold(parse_detector(det), pfa, DofParams::from_dims(l, k, mn, parse_dof(dof)));
        },
        "detector"_a, "pfa"_a, "l_cells"_a, "k_snapshots"_a, "mn"_a = 12, "dof"_a = "exact");
    m.def(
        "pfa",
        [](const std::string& det, double lambda, int l, int k, int mn, const std::string& dof) {
            return closed_form_pfa(parse_detector(det), lambda, DofParams::from_dims(l, k, mn, parse_dof(dof)));
        },
        "detector"_a, "threshold"_a, "l_cells"_a, "k_snapshots"_a, "mn"_a = 12, "dof"_a = "exact");
    m.def(
        "pd",
        [](const std::string& det, double lambda, double alpha, int l, int k, int mn, const std::string& dof) {
            return closed_form_pd(parse_detector(det), lambda, alpha, DofParams::from_dims(l, k, mn, parse_dof(dof)));
        },
        "detector"_a, "threshold"_a, "alpha"_a, "l_cells"_a, "k_snapshots"_a, "mn"_a = 12, "dof"_a = "exact");

    m.def("validate_config", [](const std::string& text) { return resolved_json(parse_config(text)); }, "config_json"_a);
    m.def("run", &run, "subcommand"_a, "config_json"_a, "seed"_a = py::none(), "pfa"_a = py::none(),
          "workers"_a = py::none());
}
