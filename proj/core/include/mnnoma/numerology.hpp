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

#ifndef MNNOMA_NUMEROLOGY_HPP
#define MNNOMA_NUMEROLOGY_HPP

#include <vector>

#include "mnnoma/types.hpp"

namespace mnnoma {

inline constexpr double kDefaultBaseSpacingHz = 15e3;
inline constexpr int kMaxNumerologyIndex = 5;

/**
 * One user's OFDM parameter set.
 *
 * Catalog entries use n_fft = 4096 / 2^mu and n_cp = 9 n_fft / 128, so every
 * numerology has the same CP ratio and the same sampled bandwidth n_fft * delta_f.
 */
struct Numerology {
    int mu = 0;
    int n_fft = 0;
    int n_cp = 0;
    std::vector<int> active_set; ///< strictly increasing subcarrier indices in [0, n_fft)
    double delta_f = 0.0;        ///< subcarrier spacing [Hz]

    [[nodiscard]] int n_act() const noexcept { return static_cast<int>(active_set.size()); }
    [[nodiscard]] int symbol_length() const noexcept { return n_fft + n_cp; }
    [[nodiscard]] double bandwidth() const noexcept { return n_fft * delta_f; }
    [[nodiscard]] bool fully_active() const noexcept { return n_act() == n_fft; }

    /// Copy with a different active set; throws InvalidArgument if the set is empty,
    /// unsorted, or out of range.
    [[nodiscard]] Numerology with_active_set(std::vector<int> active) const;

    /// Copy restricted to the contiguous index range [first, first + count).
    [[nodiscard]] Numerology with_active_range(int first, int count) const;

    void validate() const;

    friend bool operator==(const Numerology&, const Numerology&) = default;
};

/// Catalog lookup, all subcarriers active. Throws UnsupportedNumerology outside 0..5.
[[nodiscard]] Numerology numerology_from_index(int mu, double delta_f_base = kDefaultBaseSpacingHz);

/// Two numerologies sharing the band. user1 has the narrower spacing (longer symbol).
struct NumerologyPair {
    Numerology user1;
    Numerology user2;
    int q = 1; ///< n_fft(user1) / n_fft(user2)

    [[nodiscard]] double bandwidth() const noexcept { return user1.bandwidth(); }
    [[nodiscard]] int frame_length() const noexcept { return user1.symbol_length(); }
};

/// Throws IncompatibleNumerologies unless the FFT ratio is a power of two, the
/// bandwidths agree and q short symbols tile one long symbol exactly.
[[nodiscard]] NumerologyPair make_pair(Numerology user1, Numerology user2);

} // namespace mnnoma

#endif // MNNOMA_NUMEROLOGY_HPP
