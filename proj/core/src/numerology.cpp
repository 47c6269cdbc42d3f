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

#include "mnnoma/numerology.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "mnnoma/types.hpp"

namespace mnnoma {

namespace {

constexpr int kLargestFft = 4096;
constexpr int kLargestCp = 288;

std::vector<int> all_subcarriers(int n) {
    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    return idx;
}

} // namespace

void Numerology::validate() const {
    if (n_fft <= 0 || !std::has_single_bit(static_cast<unsigned>(n_fft))) {
        throw InvalidArgument("n_fft must be a positive power of two, got " + std::to_string(n_fft));
    }
    if (n_cp < 0) {
        throw InvalidArgument("n_cp must be nonnegative");
    }
    if (!(delta_f > 0.0)) {
        throw InvalidArgument("subcarrier spacing must be positive");
    }
    if (active_set.empty() || n_act() > n_fft) {
        throw InvalidArgument("active set size must lie in [1, n_fft]");
    }
    for (std::size_t i = 0; i < active_set.size(); ++i) {
        const int k = active_set[i];
        if (k < 0 || k >= n_fft) {
            throw InvalidArgument("active subcarrier " + std::to_string(k) + " out of range");
        }
        if (i > 0 && k <= active_set[i - 1]) {
            throw InvalidArgument("active set must be strictly increasing");
        }
    }
}

Numerology Numerology::with_active_set(std::vector<int> active) const {
    Numerology out = *this;
    out.active_set = std::move(active);
    out.validate();
    return out;
}

Numerology Numerology::with_active_range(int first, int count) const {
    if (count <= 0 || first < 0 || first + count > n_fft) {
        throw InvalidArgument("active range [" + std::to_string(first) + ", " +
                              std::to_string(first + count) + ") does not fit in " +
                              std::to_string(n_fft) + " subcarriers");
    }
    std::vector<int> idx(static_cast<std::size_t>(count));
    std::iota(idx.begin(), idx.end(), first);
    return with_active_set(std::move(idx));
}

Numerology numerology_from_index(int mu, double delta_f_base) {
    if (mu < 0 || mu > kMaxNumerologyIndex) {
        throw UnsupportedNumerology("numerology " + std::to_string(mu) + " is not in the catalog (0..5)");
    }
    if (!(delta_f_base > 0.0)) {
        throw InvalidArgument("base subcarrier spacing must be positive");
    }
    Numerology num;
    num.mu = mu;
    num.n_fft = kLargestFft >> mu;
    num.n_cp = kLargestCp >> mu;
    num.delta_f = delta_f_base * static_cast<double>(1 << mu);
    num.active_set = all_subcarriers(num.n_fft);
    return num;
}

NumerologyPair make_pair(Numerology user1, Numerology user2) {
    user1.validate();
    user2.validate();
    if (user1.n_fft < user2.n_fft) {
        throw IncompatibleNumerologies("user 1 must have the larger FFT size");
    }
    if (user1.n_fft % user2.n_fft != 0 ||
        !std::has_single_bit(static_cast<unsigned>(user1.n_fft / user2.n_fft))) {
        throw IncompatibleNumerologies("FFT size ratio is not a power of two");
    }
    const int q = user1.n_fft / user2.n_fft;
    const double b1 = user1.bandwidth();
    const double b2 = user2.bandwidth();
    if (std::abs(b1 - b2) > 1e-9 * std::max(b1, b2)) {
        throw IncompatibleNumerologies("numerologies do not span the same bandwidth");
    }
    if (user1.symbol_length() != q * user2.symbol_length()) {
        throw IncompatibleNumerologies("q = " + std::to_string(q) +
                                       " short symbols do not tile one long symbol (L1 = " +
                                       std::to_string(user1.symbol_length()) + ", L2 = " +
                                       std::to_string(user2.symbol_length()) + ")");
    }
    return NumerologyPair{std::move(user1), std::move(user2), q};
}

} // namespace mnnoma
