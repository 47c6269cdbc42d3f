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

#include "mnnoma/sim_chain.hpp"

#include <cmath>
#include <span>
#include <string>

#include "mnnoma/parallel.hpp"

namespace mnnoma {

namespace {

constexpr int kBlockTrials = 64;

std::span<const cd> segment(const CVector& v, Eigen::Index start, Eigen::Index len) {
    return {v.data() + start, static_cast<std::size_t>(len)};
}

} // namespace

FrameSymbols draw_frame_symbols(const NumerologyPair& pair, Rng& data1, Rng& data2, std::int64_t k) {
    FrameSymbols f;
    f.d1 = qpsk_symbols(data1, pair.user1.n_act());
    f.d2_tilde = qpsk_symbols(data2, static_cast<Eigen::Index>(pair.q) * pair.user2.n_act());
    f.k = k;
    return f;
}

SimChain::SimChain(NumerologyPair pair, ChannelRealization h1, ChannelRealization h2)
    : pair_(std::move(pair)),
      h1_(toeplitz_matrix(h1, pair_.frame_length())),
      h2_(toeplitz_matrix(h2, pair_.frame_length())),
      modem1_(pair_.user1),
      modem2_(pair_.user2) {
    for (const auto* h : {&h1, &h2}) {
        if (!is_admissible(*h, pair_.user2.n_cp)) {
            throw ChannelTooLong("channel with N_ch = " + std::to_string(h->n_ch()) + " exceeds the " +
                                 std::to_string(pair_.user2.n_cp) + "-sample CP of user 2");
        }
    }
}

CVector SimChain::remodulate(int user, const FrameSymbols& frame, const PowerSplit& split) const {
    if (user == 1) {
        return std::sqrt(split.p1) * h1_.apply(modem1_.modulate(frame.d1));
    }
    if (user == 2) {
        return std::sqrt(split.p2) * h2_.apply(modem2_.modulate_frame(frame.d2_tilde, pair_.q));
    }
    throw InvalidArgument("user must be 1 or 2");
}

ReceivedFrame SimChain::synthesize_frame(const FrameSymbols& frame, const PowerSplit& split, double n0,
                                         Rng& noise) const {
    if (n0 < 0.0) {
        throw InvalidArgument("noise PSD must be nonnegative");
    }
    const int len = pair_.frame_length();
    ReceivedFrame rx;
    rx.s1 = std::sqrt(split.p1) * modem1_.modulate(frame.d1);
    rx.s2 = std::sqrt(split.p2) * modem2_.modulate_frame(frame.d2_tilde, pair_.q);
    rx.rx1 = h1_.apply(rx.s1);
    rx.rx2 = h2_.apply(rx.s2);
    rx.w = CVector::Zero(len);
    if (n0 > 0.0) {
        for (int t = 0; t < len; ++t) {
            rx.w(t) = complex_gaussian(noise, n0);
        }
    }
    rx.r = rx.rx1 + rx.rx2 + rx.w;
    return rx;
}

CVector SimChain::front_end_user1(const CVector& r) const {
    if (r.size() != pair_.frame_length()) {
        throw DimensionMismatch("received frame has " + std::to_string(r.size()) + " samples");
    }
    return modem1_.demodulate(segment(r, 0, r.size()));
}

CVector SimChain::front_end_user2(const CVector& r, int m) const {
    if (m < 1 || m > pair_.q) {
        throw InvalidArgument("symbol index m = " + std::to_string(m) + " outside [1, " + std::to_string(pair_.q) + "]");
    }
    if (r.size() != pair_.frame_length()) {
        throw DimensionMismatch("received frame has " + std::to_string(r.size()) + " samples");
    }
    const int l2 = pair_.user2.symbol_length();
    return modem2_.demodulate(segment(r, static_cast<Eigen::Index>(m - 1) * l2, l2));
}

SicObservations SimChain::genie_sic(const ReceivedFrame& rx, const FrameSymbols& frame, const PowerSplit& split,
                                    Ordering order) const {
    SicObservations obs;
    if (order == Ordering::User1First) {
        obs.first.push_back(front_end_user1(rx.r));
        const CVector cleaned = rx.r - remodulate(1, frame, split);
        for (int m = 1; m <= pair_.q; ++m) {
            obs.second.push_back(front_end_user2(cleaned, m));
        }
    } else {
        for (int m = 1; m <= pair_.q; ++m) {
            obs.first.push_back(front_end_user2(rx.r, m));
        }
        const CVector cleaned = rx.r - remodulate(2, frame, split);
        obs.second.push_back(front_end_user1(cleaned));
    }
    return obs;
}

std::vector<RVector> SimChain::empirical_interference(Ordering order, const PowerSplit& split, int trials,
                                                      std::uint64_t seed, int threads) const {
    if (trials < kMinTrials) {
        throw InvalidArgument("empirical interference needs at least " + std::to_string(kMinTrials) +
                              " trials, got " + std::to_string(trials));
    }
    const bool victim1 = order == Ordering::User1First;
    const int outputs = victim1 ? 1 : pair_.q;
    const int width = victim1 ? pair_.user1.n_act() : pair_.user2.n_act();
    const int blocks = (trials + kBlockTrials - 1) / kBlockTrials;

    std::vector<std::vector<RVector>> partial(static_cast<std::size_t>(blocks),
                                              std::vector<RVector>(static_cast<std::size_t>(outputs),
                                                                   RVector::Zero(width)));
    parallel_for(static_cast<std::size_t>(blocks), threads, [&](std::size_t b) {
        auto& acc = partial[b];
        Rng unused(0);
        const int first = static_cast<int>(b) * kBlockTrials;
        const int last = std::min(trials, first + kBlockTrials);
        for (int t = first; t < last; ++t) {
            Rng data1 = make_stream(seed, static_cast<std::uint64_t>(t), Stream::DataUser1);
            Rng data2 = make_stream(seed, static_cast<std::uint64_t>(t), Stream::DataUser2);
            const FrameSymbols frame = draw_frame_symbols(pair_, data1, data2, t);
            const ReceivedFrame rx = synthesize_frame(frame, split, 0.0, unused);
            if (victim1) {
                const CVector y = front_end_user1(rx.rx2);
                acc[0] += y.cwiseAbs2();
            } else {
                for (int m = 1; m <= pair_.q; ++m) {
                    const CVector y = front_end_user2(rx.rx1, m);
                    acc[static_cast<std::size_t>(m - 1)] += y.cwiseAbs2();
                }
            }
        }
    });

    std::vector<RVector> out(static_cast<std::size_t>(outputs), RVector::Zero(width));
    for (const auto& block : partial) {
        for (int i = 0; i < outputs; ++i) {
            out[static_cast<std::size_t>(i)] += block[static_cast<std::size_t>(i)];
        }
    }
    for (auto& v : out) {
        v /= static_cast<double>(trials);
    }
    return out;
}

} // namespace mnnoma
