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

#ifndef MNNOMA_RATE_ANALYSIS_HPP
#define MNNOMA_RATE_ANALYSIS_HPP

#include <string_view>
#include <vector>

#include "mnnoma/channel.hpp"
#include "mnnoma/ini_analysis.hpp"
#include "mnnoma/numerology.hpp"
#include "mnnoma/types.hpp"

namespace mnnoma {

/// p1 + p2 = total, both nonnegative.
struct PowerSplit {
    double p1 = 0.0;
    double p2 = 0.0;
    double total = 0.0;

    /// p1 = alpha * total, alpha in [0, 1].
    [[nodiscard]] static PowerSplit from_fraction(double alpha, double total);
    [[nodiscard]] double alpha() const noexcept { return total > 0.0 ? p1 / total : 0.0; }
};

enum class Scheme { MnNoma, SnNoma, MnOma, SnOma };

[[nodiscard]] std::string_view scheme_name(Scheme s) noexcept;

/// Numerology the single-numerology baselines put both users on.
enum class SnReference { User1, User2 };

struct RateOptions {
    bool cp_overhead = false; ///< scale rates by N / (N + N_cp)
};

/**
 * SNR-independent state of one channel instance: per-subcarrier channel gains and the
 * INI each user would suffer when decoded first. Computing this is the expensive part;
 * the power search and the SNR sweep reuse it.
 */
struct LinkState {
    Numerology user1;
    Numerology user2; ///< active set may be empty for a fully guarded OMA layout
    int q = 1;
    double bandwidth = 0.0;
    RVector gain1;                    ///< |psi1|^2 on user 1's active set
    RVector gain2;                    ///< |psi2|^2 on user 2's active set
    MseVector mse_user1;              ///< gamma^(1<-2)
    std::vector<MseVector> mse_user2; ///< gamma_m^(2<-1), m = 1..q
};

/// Full MN-NOMA link analysis. Both channels must fit inside user 2's (shorter) CP.
[[nodiscard]] LinkState analyze_link(const ChannelRealization& h1, const ChannelRealization& h2,
                                     const NumerologyPair& pair, IniFault fault = IniFault::None);

struct RateReport {
    Scheme scheme = Scheme::MnNoma;
    int ordering = 0; ///< 1 or 2 for NOMA, 0 for OMA
    double rate1 = 0.0;
    double rate2 = 0.0;
    double sum_rate = 0.0;
    double se = 0.0; ///< sum_rate / bandwidth
    RVector sinr1;
    std::vector<RVector> sinr2; ///< one vector per short symbol when user 2 is interfered, else one
    bool user1_interfered = false;
    bool user2_interfered = false;
    PowerSplit split;
    double noise_psd = 0.0;
};

/// p_own |psi|^2 / (p_other gamma + n0) per subcarrier.
[[nodiscard]] RVector sinr_first_decoded(double p_own, double p_other, const RVector& gain, const MseVector& mse,
                                         double n0);

/// (B / N) sum_n log2(1 + sinr_n).
[[nodiscard]] double rate_first_decoded(const Numerology& num, const RVector& sinr, double bandwidth,
                                        const RateOptions& opts = {});

/// Mean over the q short symbols of (B / N2) sum_n log2(1 + sinr_{m,n}).
[[nodiscard]] double rate_first_decoded(const Numerology& num, const std::vector<RVector>& sinr_per_symbol,
                                        double bandwidth, const RateOptions& opts = {});

/// Interference-free rate of the user decoded after cancellation.
[[nodiscard]] double rate_second_decoded(const Numerology& num, const RVector& gain, double power, double n0,
                                         double bandwidth, const RateOptions& opts = {});

/// Both users' rates for one ordering and one power split.
[[nodiscard]] RateReport evaluate_noma(const LinkState& link, Ordering ordering, const PowerSplit& split, double n0,
                                       const RateOptions& opts = {}, Scheme scheme = Scheme::MnNoma);

/// Candidate fractions step, 2 step, ..., strictly below one.
[[nodiscard]] std::vector<double> power_grid(double step);

/// Relative margin a later candidate must beat the incumbent by; keeps ties on the smallest alpha.
inline constexpr double kTieTolerance = 1e-12;

struct SearchResult {
    PowerSplit split;
    RateReport report;
    int candidates = 0;
};

[[nodiscard]] SearchResult exhaustive_power_search(const LinkState& link, Ordering ordering, double n0,
                                                   double total_power, double grid_step,
                                                   const RateOptions& opts = {}, Scheme scheme = Scheme::MnNoma);

[[nodiscard]] SearchResult exhaustive_power_search(const ChannelRealization& h1, const ChannelRealization& h2,
                                                   const NumerologyPair& pair, Ordering ordering, double n0,
                                                   double total_power, double grid_step);

/// Both users on one numerology: the q = 1 pair of the chosen reference.
[[nodiscard]] NumerologyPair single_numerology_pair(const NumerologyPair& pair, SnReference ref);

/// Disjoint-band layout: user 1 on the lower half of its grid, user 2 on the upper half
/// of its grid minus guard_band subcarriers at the edge facing user 1.
struct OmaLayout {
    Numerology user1;
    Numerology user2; ///< empty active set when guard_band covers the whole half
    int q = 1;
};

[[nodiscard]] OmaLayout oma_layout(const Numerology& user1, const Numerology& user2, int guard_band);

/// Gains and mutual INI of an OMA layout; ideal drops the INI terms.
[[nodiscard]] LinkState analyze_oma_link(const ChannelRealization& h1, const ChannelRealization& h2,
                                         const OmaLayout& layout, bool ideal);

/// Equal-power (P/2 each) OMA rates; each user treats the other's INI as noise.
[[nodiscard]] RateReport evaluate_oma(const LinkState& link, double n0, double total_power, Scheme scheme,
                                      const RateOptions& opts = {});

struct BaselineInputs {
    ChannelRealization h1;
    ChannelRealization h2;
    NumerologyPair pair;
    double n0 = 1.0;
    double total_power = 1.0;
    double grid_step = 0.01;
    Ordering ordering = Ordering::User1First; ///< SN-NOMA only
    SnReference sn_reference = SnReference::User1;
    int guard_band = 0; ///< MN-OMA only, in user-2 subcarriers
    bool ideal_oma = false;
    RateOptions rate;
};

/// SN-NOMA (optimized split), MN-OMA or SN-OMA for one channel instance.
[[nodiscard]] RateReport baseline_rates(Scheme kind, const BaselineInputs& in);

} // namespace mnnoma

#endif // MNNOMA_RATE_ANALYSIS_HPP
