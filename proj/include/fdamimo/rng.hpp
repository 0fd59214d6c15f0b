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

#ifndef FDAMIMO_RNG_HPP
#define FDAMIMO_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

#include "fdamimo/types.hpp"

namespace fdamimo {

using Rng = std::mt19937_64;

// Independent stream for one Monte Carlo trial. The stream is a pure function
// of (seed, experiment, trial), so results never depend on how trials are
// scheduled across workers.
Rng trial_stream(std::uint64_t seed, std::uint64_t experiment, std::uint64_t trial);

// Matrix of IID CN(0, 1) entries: real and imaginary parts each N(0, 1/2).
CMatrix standard_complex_normal(Eigen::Index rows, Eigen::Index cols, Rng& rng);

// Stable 64-bit tag for naming experiments (FNV-1a).
std::uint64_t experiment_tag(std::string_view name);

} // namespace fdamimo

#endif
