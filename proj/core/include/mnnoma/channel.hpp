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

#ifndef MNNOMA_CHANNEL_HPP
#define MNNOMA_CHANNEL_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mnnoma/random.hpp"
#include "mnnoma/types.hpp"

namespace mnnoma {

/// Tapped-delay-line power delay profile.
struct TapProfile {
    std::string name;
    std::vector<double> delays; ///< seconds, nonnegative, strictly increasing
    std::vector<double> powers_db;
    bool normalize = true; ///< scale linear tap powers to sum to one

    void validate() const;
    [[nodiscard]] double max_delay() const;
};

/// 3GPP Extended Pedestrian A.
[[nodiscard]] TapProfile epa_profile();
/// 3GPP Extended Vehicular A.
[[nodiscard]] TapProfile eva_profile();
/// Single unit tap at zero delay.
[[nodiscard]] TapProfile flat_profile();

/// "EPA", "EVA" or "FLAT" (case-insensitive); anything else throws ConfigError.
[[nodiscard]] TapProfile builtin_profile(std::string_view name);

/**
 * Reads a profile from JSON:
 *   {"name": "...", "normalize": true, "taps": [[delay_ns, power_db], ...]}
 */
[[nodiscard]] TapProfile load_profile(const std::filesystem::path& path);

/// Built-in name or path to a profile file.
[[nodiscard]] TapProfile resolve_profile(const std::string& name_or_path);

/// Sampled impulse response h_0..h_Nch.
struct ChannelRealization {
    CVector h;
    double fs = 0.0;
    std::string seed_tag;

    [[nodiscard]] int n_ch() const noexcept { return static_cast<int>(h.size()) - 1; }
};

/**
 * One Rayleigh draw of a profile. Tap l becomes CN(0, power_l) at sample
 * round(delay_l * fs); taps landing on the same sample add.
 */
[[nodiscard]] ChannelRealization draw_realization(const TapProfile& profile, double fs, Rng& rng);

/// Largest sample index a profile occupies at rate fs.
[[nodiscard]] int max_tap_index(const TapProfile& profile, double fs);

/**
 * Largest fs = bandwidth / 2^k (k >= 0) at which every tap of a profile with the given
 * maximum delay lands inside a CP of min_ncp samples.
 */
[[nodiscard]] double default_sampling_rate(double bandwidth, double max_delay, int min_ncp);

/// True when the impulse response fits inside an n_cp-sample prefix.
[[nodiscard]] inline bool is_admissible(const ChannelRealization& h, int n_cp) noexcept {
    return h.n_ch() <= n_cp;
}

/**
 * L x L lower-triangular Toeplitz matrix with first column [h; 0].
 *
 * Stored as its taps; dense() materializes it, apply() is a truncated linear convolution.
 */
class ChannelMatrix {
public:
    ChannelMatrix(CVector taps, int size);

    [[nodiscard]] int size() const noexcept { return size_; }
    [[nodiscard]] int n_ch() const noexcept { return static_cast<int>(taps_.size()) - 1; }
    [[nodiscard]] const CVector& taps() const noexcept { return taps_; }

    [[nodiscard]] cd operator()(int row, int col) const noexcept {
        const int lag = row - col;
        return (lag >= 0 && lag <= n_ch()) ? taps_(lag) : cd{};
    }

    [[nodiscard]] CMatrix dense() const;
    [[nodiscard]] CVector apply(const CVector& x) const;

private:
    CVector taps_;
    int size_;
};

/// Throws ChannelTooLong when N_ch + 1 > L.
[[nodiscard]] ChannelMatrix toeplitz_matrix(const ChannelRealization& h, int size);

/// Channel frequency response psi_n = sum_l h_l exp(-j 2 pi n l / N), n = 0..N-1.
struct Cfr {
    CVector psi;

    [[nodiscard]] RVector power() const { return psi.cwiseAbs2(); }
};

[[nodiscard]] Cfr cfr(const CVector& h, int n);
[[nodiscard]] Cfr cfr(const ChannelRealization& h, int n);

} // namespace mnnoma

#endif // MNNOMA_CHANNEL_HPP
