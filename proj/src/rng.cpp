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

#include "fdamimo/rng.hpp"

#include <array>
#include <cmath>
#include <string_view>

namespace fdamimo {

Rng trial_stream(std::uint64_t seed, std::uint64_t experiment, std::uint64_t trial)
{
    const std::array<std::uint32_t, 6> words{
        static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(experiment), static_cast<std::uint32_t>(experiment >> 32),
        static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    std::seed_seq seq(words.begin(), words.end());
    return Rng(seq);
}

CMatrix standard_complex_normal(Eigen::Index rows, Eigen::Index cols, Rng& rng)
{
    std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
    CMatrix g(rows, cols);
    // Column-major fill order is part of the reproducibility contract.
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            g(i, j) = cd(re, im);
        }
    }
    return g;
}

std::uint64_t experiment_tag(std::string_view name)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char ch : name) {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace fdamimo
