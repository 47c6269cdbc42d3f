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

#include <random>

#include <gtest/gtest.h>

#include "mnnoma/ini_analysis.hpp"
#include "mnnoma/sim_chain.hpp"
#include "oracles/dense_oracles.hpp"
#include "test_support.hpp"

using namespace mnnoma;

namespace {

struct Link {
    NumerologyPair pair = make_pair(numerology_from_index(4), numerology_from_index(5));
    ChannelRealization h1;
    ChannelRealization h2;

    explicit Link(std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        h1 = testing_support::random_channel(rng, 7);
        h2 = testing_support::random_channel(rng, 9);
    }
};

FrameSymbols frame_for(const NumerologyPair& pair, std::uint64_t t) {
    Rng d1 = make_stream(99, t, Stream::DataUser1);
    Rng d2 = make_stream(99, t, Stream::DataUser2);
    return draw_frame_symbols(pair, d1, d2, static_cast<std::int64_t>(t));
}

} // namespace

TEST(SimChain, QpskIsUnitEnergy) {
    Rng rng = make_stream(1, 0, Stream::DataUser1);
    const CVector d = qpsk_symbols(rng, 1000);
    EXPECT_LT((d.cwiseAbs2().array() - 1.0).abs().maxCoeff(), 1e-15);
}

TEST(SimChain, NoiselessSingleUserIsChannelTimesSignal) {
    const Link l(51);
    const SimChain chain(l.pair, l.h1, l.h2);
    const FrameSymbols f = frame_for(l.pair, 0);
    Rng noise = make_stream(1, 0, Stream::Noise);
    const PowerSplit s{0.7, 0.0, 0.7};
    const ReceivedFrame rx = chain.synthesize_frame(f, s, 0.0, noise);
    const CVector want = std::sqrt(0.7) * oracle::convolve(l.h1.h, oracle::modulate(f.d1, l.pair.user1));
    EXPECT_LT((rx.r - want).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_TRUE(rx.w.isZero());
}

TEST(SimChain, NoiseOnlyFrameHasVarianceN0) {
    // [DERIVED] sample variance over 1e5 samples: standard error 0.3%, bound 2%
    const Link l(52);
    const SimChain chain(l.pair, l.h1, l.h2);
    const FrameSymbols f = frame_for(l.pair, 0);
    const PowerSplit zero{0.0, 0.0, 0.0};
    double acc = 0.0;
    long long count = 0;
    for (int t = 0; count < 100000; ++t) {
        Rng noise = make_stream(3, static_cast<std::uint64_t>(t), Stream::Noise);
        const ReceivedFrame rx = chain.synthesize_frame(f, zero, 0.25, noise);
        EXPECT_EQ(rx.r, rx.w);
        acc += rx.r.squaredNorm();
        count += rx.r.size();
    }
    EXPECT_NEAR(acc / count / 0.25, 1.0, 0.02);
}

TEST(SimChain, ReceivedEnergyIsSumOfParts) {
    // [DERIVED] E||r||^2 = p1 E||H1 x1||^2 + p2 E||H2 x2||^2 + L n0 for independent inputs
    const Link l(53);
    const SimChain chain(l.pair, l.h1, l.h2);
    const PowerSplit s{0.3, 0.7, 1.0};
    const double n0 = 0.01;
    double total = 0.0;
    double parts = 0.0;
    const int trials = 10000;
    for (int t = 0; t < trials; ++t) {
        const FrameSymbols f = frame_for(l.pair, static_cast<std::uint64_t>(t));
        Rng noise = make_stream(4, static_cast<std::uint64_t>(t), Stream::Noise);
        const ReceivedFrame rx = chain.synthesize_frame(f, s, n0, noise);
        total += rx.r.squaredNorm();
        parts += rx.rx1.squaredNorm() + rx.rx2.squaredNorm();
    }
    parts += trials * l.pair.frame_length() * n0;
    EXPECT_NEAR(total / parts, 1.0, 0.03);
}

TEST(SimChain, FrontEndsDiagonalizeTheirOwnChannel) {
    const Link l(54);
    const SimChain chain(l.pair, l.h1, l.h2);
    const FrameSymbols f = frame_for(l.pair, 1);
    Rng noise = make_stream(1, 0, Stream::Noise);
    const CVector psi1 = oracle::cfr(l.h1.h, 256);
    const CVector psi2 = oracle::cfr(l.h2.h, 128);

    const ReceivedFrame only1 = chain.synthesize_frame(f, PowerSplit{0.5, 0.0, 0.5}, 0.0, noise);
    const CVector want1 = std::sqrt(0.5) * psi1.cwiseProduct(f.d1);
    EXPECT_LT((chain.front_end_user1(only1.r) - want1).cwiseAbs().maxCoeff(), 1e-10);

    const ReceivedFrame only2 = chain.synthesize_frame(f, PowerSplit{0.0, 0.5, 0.5}, 0.0, noise);
    for (int m = 1; m <= 2; ++m) {
        const CVector want2 = std::sqrt(0.5) * psi2.cwiseProduct(f.d2_tilde.segment((m - 1) * 128, 128));
        EXPECT_LT((chain.front_end_user2(only2.r, m) - want2).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(SimChain, FrontEndsAreLinear) {
    const Link l(55);
    const SimChain chain(l.pair, l.h1, l.h2);
    std::mt19937_64 rng(5);
    const CVector a = testing_support::random_symbols(rng, l.pair.frame_length());
    const CVector b = testing_support::random_symbols(rng, l.pair.frame_length());
    const cd x(0.3, -1.2);
    const cd y(2.0, 0.5);
    EXPECT_LT((chain.front_end_user1(x * a + y * b) - x * chain.front_end_user1(a) - y * chain.front_end_user1(b))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-12);
    EXPECT_LT((chain.front_end_user2(x * a + y * b, 2) - x * chain.front_end_user2(a, 2) -
               y * chain.front_end_user2(b, 2))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-12);
    EXPECT_TRUE(chain.front_end_user1(CVector::Zero(l.pair.frame_length())).isZero());
    EXPECT_THROW((void)chain.front_end_user2(a, 3), InvalidArgument);
    EXPECT_THROW((void)chain.front_end_user1(CVector::Zero(5)), DimensionMismatch);
}

TEST(SimChain, FrontEndsMatchDenseDefinition) {
    const Link l(56);
    const SimChain chain(l.pair, l.h1, l.h2);
    std::mt19937_64 rng(6);
    const CVector r = testing_support::random_symbols(rng, l.pair.frame_length());
    const CMatrix rx1 = oracle::dft(256) * oracle::cp_strip(256, 18);
    EXPECT_LT((chain.front_end_user1(r) - rx1 * r).cwiseAbs().maxCoeff(), 1e-10);
    const CMatrix rx2 = oracle::dft(128) * oracle::cp_strip(128, 9);
    EXPECT_LT((chain.front_end_user2(r, 2) - rx2 * r.segment(137, 137)).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(SimChain, GenieSicRemovesFirstUserExactly) {
    const Link l(57);
    const SimChain chain(l.pair, l.h1, l.h2);
    const FrameSymbols f = frame_for(l.pair, 2);
    Rng noise = make_stream(1, 0, Stream::Noise);
    const PowerSplit s{0.4, 0.6, 1.0};
    const ReceivedFrame rx = chain.synthesize_frame(f, s, 0.0, noise);
    const CVector psi1 = oracle::cfr(l.h1.h, 256);
    const CVector psi2 = oracle::cfr(l.h2.h, 128);

    const SicObservations o1 = chain.genie_sic(rx, f, s, Ordering::User1First);
    ASSERT_EQ(o1.first.size(), 1U);
    ASSERT_EQ(o1.second.size(), 2U);
    for (int m = 0; m < 2; ++m) {
        const CVector want = std::sqrt(0.6) * psi2.cwiseProduct(f.d2_tilde.segment(m * 128, 128));
        EXPECT_LT((o1.second[m] - want).cwiseAbs().maxCoeff(), 1e-10);
    }
    const SicObservations o2 = chain.genie_sic(rx, f, s, Ordering::User2First);
    ASSERT_EQ(o2.first.size(), 2U);
    const CVector want = std::sqrt(0.4) * psi1.cwiseProduct(f.d1);
    EXPECT_LT((o2.second.front() - want).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(SimChain, ZeroPowerLeavesFilteredNoise) {
    const Link l(58);
    const SimChain chain(l.pair, l.h1, l.h2);
    const FrameSymbols f = frame_for(l.pair, 3);
    Rng noise = make_stream(1, 7, Stream::Noise);
    const PowerSplit zero{0.0, 0.0, 0.0};
    const ReceivedFrame rx = chain.synthesize_frame(f, zero, 1.0, noise);
    const SicObservations o = chain.genie_sic(rx, f, zero, Ordering::User1First);
    EXPECT_LT((o.first.front() - chain.front_end_user1(rx.w)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((o.second[1] - chain.front_end_user2(rx.w, 2)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(SimChain, EmpiricalInterferenceBasics) {
    const Link l(59);
    const SimChain chain(l.pair, l.h1, l.h2);
    EXPECT_THROW((void)chain.empirical_interference(Ordering::User1First, PowerSplit{0.5, 0.5, 1}, 99, 1),
                 InvalidArgument);
    const auto silent = chain.empirical_interference(Ordering::User1First, PowerSplit{1.0, 0.0, 1.0}, 100, 1);
    EXPECT_TRUE(silent.front().isZero());
    const auto o2 = chain.empirical_interference(Ordering::User2First, PowerSplit{0.5, 0.5, 1}, 100, 1);
    EXPECT_EQ(o2.size(), 2U);
}

TEST(SimChain, EmpiricalInterferenceIndependentOfThreads) {
    const Link l(60);
    const SimChain chain(l.pair, l.h1, l.h2);
    const PowerSplit s{0.5, 0.5, 1.0};
    const auto a = chain.empirical_interference(Ordering::User2First, s, 300, 4, 1);
    const auto b = chain.empirical_interference(Ordering::User2First, s, 300, 4, 3);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i], b[i]);
    }
}

TEST(SimChain, SameNumerologyFlatInterferenceIsUnit) {
    // [DERIVED] q = 1 and unit channels: the interferer lands on the victim's tones with unit gain
    const NumerologyPair pair = make_pair(numerology_from_index(5), numerology_from_index(5));
    const ChannelRealization flat{CVector::Ones(1), 1.0, "flat"};
    const SimChain chain(pair, flat, flat);
    const auto v = chain.empirical_interference(Ordering::User1First, PowerSplit{0.0, 1.0, 1.0}, 10000, 2);
    EXPECT_LT((v.front().array() - 1.0).abs().maxCoeff(), 1e-12);
}

TEST(SimChain, EmpiricalInterferenceTracksGamma) {
    // [DERIVED] 4000 frames: relative standard error about 1.6%, checked at 10% per tone
    const Link l(61);
    const SimChain chain(l.pair, l.h1, l.h2);
    const PowerSplit s{0.5, 0.5, 1.0};
    const RVector g1 = mse_ordering1(ChannelMatrix(l.h2.h, l.pair.frame_length()), l.pair).gamma;
    const auto e1 = chain.empirical_interference(Ordering::User1First, s, 4000, 8);
    EXPECT_LT(((e1.front() - 0.5 * g1).array() / (0.5 * g1).array()).abs().maxCoeff(), 0.1);
    const auto g2 = mse_ordering2(ChannelMatrix(l.h1.h, l.pair.frame_length()), l.pair);
    const auto e2 = chain.empirical_interference(Ordering::User2First, s, 4000, 8);
    for (int m = 0; m < 2; ++m) {
        EXPECT_LT(((e2[m] - 0.5 * g2[m].gamma).array() / (0.5 * g2[m].gamma).array()).abs().maxCoeff(), 0.1);
    }
}

TEST(SimChain, RejectsLongChannels) {
    const Link l(62);
    std::mt19937_64 rng(1);
    EXPECT_THROW(SimChain(l.pair, testing_support::random_channel(rng, 10), l.h2), ChannelTooLong);
}
