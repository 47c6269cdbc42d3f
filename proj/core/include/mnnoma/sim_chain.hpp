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

#ifndef MNNOMA_SIM_CHAIN_HPP
#define MNNOMA_SIM_CHAIN_HPP

#include <cstdint>
#include <vector>

#include "mnnoma/channel.hpp"
#include "mnnoma/ini_analysis.hpp"
#include "mnnoma/numerology.hpp"
#include "mnnoma/ofdm_ops.hpp"
#include "mnnoma/random.hpp"
#include "mnnoma/rate_analysis.hpp"
#include "mnnoma/types.hpp"

namespace mnnoma {

/// Data of one long-symbol frame: d1 for user 1, q concatenated short-symbol vectors for user 2.
struct FrameSymbols {
    CVector d1;
    CVector d2_tilde;
    std::int64_t k = 0;
};

/// Unit-energy QPSK for both users.
[[nodiscard]] FrameSymbols draw_frame_symbols(const NumerologyPair& pair, Rng& data1, Rng& data2,
                                              std::int64_t k = 0);

/// r = H1 s1 + H2 s2 + w with every constituent kept for genie-aided processing.
struct ReceivedFrame {
    CVector r;
    CVector w;
    CVector s1;
    CVector s2;
    CVector rx1; ///< H1 s1
    CVector rx2; ///< H2 s2
};

/// Observations of both SIC stages. For User1First, first = {y1}, second = {y2_1..y2_q};
/// for User2First, first = {y2_1..y2_q}, second = {y1}.
struct SicObservations {
    std::vector<CVector> first;
    std::vector<CVector> second;
};

/**
 * Time-domain uplink MN-NOMA link with fixed channels. Independent of the closed-form
 * INI analysis: it only modulates, convolves, adds noise and demodulates.
 */
class SimChain {
public:
    SimChain(NumerologyPair pair, ChannelRealization h1, ChannelRealization h2);

    [[nodiscard]] const NumerologyPair& pair() const noexcept { return pair_; }

    /// Noise is CN(0, n0) per sample; n0 = 0 disables it without consuming randomness.
    [[nodiscard]] ReceivedFrame synthesize_frame(const FrameSymbols& frame, const PowerSplit& split, double n0,
                                                 Rng& noise) const;

    /// F1 Rcp1 r.
    [[nodiscard]] CVector front_end_user1(const CVector& r) const;

    /// F2 Rcp2 C_m r, 1 <= m <= q.
    [[nodiscard]] CVector front_end_user2(const CVector& r, int m) const;

    /// Two-stage SIC where the first user is re-modulated from its true symbols and subtracted.
    [[nodiscard]] SicObservations genie_sic(const ReceivedFrame& rx, const FrameSymbols& frame,
                                            const PowerSplit& split, Ordering order) const;

    /// sqrt(p1) H1 x1 or sqrt(p2) H2 x2_tilde rebuilt from the symbols.
    [[nodiscard]] CVector remodulate(int user, const FrameSymbols& frame, const PowerSplit& split) const;

    /**
     * Mean per-subcarrier power of the interference seen by the first-decoded user,
     * over `trials` noise-free frames with fresh QPSK data. Returns one vector for
     * User1First and q vectors (m = 1..q) for User2First. Trial t draws its data from
     * make_stream(seed, t, ...), and partial sums combine in a fixed order, so the
     * result does not depend on `threads`.
     */
    [[nodiscard]] std::vector<RVector> empirical_interference(Ordering order, const PowerSplit& split, int trials,
                                                              std::uint64_t seed, int threads = 0) const;

    static constexpr int kMinTrials = 100;

private:
    NumerologyPair pair_;
    ChannelMatrix h1_;
    ChannelMatrix h2_;
    OfdmModem modem1_;
    OfdmModem modem2_;
};

} // namespace mnnoma

#endif // MNNOMA_SIM_CHAIN_HPP
