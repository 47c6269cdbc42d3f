/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 The mnnoma Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MNNOMA_RANDOM_HPP
#define MNNOMA_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <random>

#include "mnnoma/types.hpp"

namespace mnnoma {

using Rng = std::mt19937_64;

/// Independent random streams drawn for one trial.
enum class Stream : std::uint32_t {
    ChannelUser1 = 1,
    ChannelUser2 = 2,
    DataUser1 = 3,
    DataUser2 = 4,
    Noise = 5,
};

/// Deterministic generator for (master seed, trial, stream); independent of thread layout.
[[nodiscard]] inline Rng make_stream(std::uint64_t seed, std::uint64_t trial, Stream stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32),
                      static_cast<std::uint32_t>(stream)};
    return Rng(seq);
}

/// Circularly-symmetric complex Gaussian with E|z|^2 = variance.
[[nodiscard]] inline cd complex_gaussian(Rng& rng, double variance) {
    std::normal_distribution<double> dist(0.0, std::sqrt(variance / 2.0));
    const double re = dist(rng);
    const double im = dist(rng);
    return {re, im};
}

/// i.i.d. unit-energy QPSK symbols.
[[nodiscard]] inline CVector qpsk_symbols(Rng& rng, Eigen::Index count) {
    static constexpr double a = 0.70710678118654752440;
    CVector d(count);
    for (Eigen::Index i = 0; i < count; ++i) {
        const auto bits = rng();
        d(i) = cd((bits & 1U) != 0U ? a : -a, (bits & 2U) != 0U ? a : -a);
    }
    return d;
}

} // namespace mnnoma

#endif // MNNOMA_RANDOM_HPP
