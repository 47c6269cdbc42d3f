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

#include <gtest/gtest.h>

#include "mnnoma/numerology.hpp"

using namespace mnnoma;

TEST(Numerology, CatalogEntries) {
    const int n_fft[] = {4096, 2048, 1024, 512, 256, 128};
    const int n_cp[] = {288, 144, 72, 36, 18, 9};
    for (int mu = 0; mu <= 5; ++mu) {
        const Numerology n = numerology_from_index(mu);
        EXPECT_EQ(n.mu, mu);
        EXPECT_EQ(n.n_fft, n_fft[mu]);
        EXPECT_EQ(n.n_cp, n_cp[mu]);
        EXPECT_EQ(n.symbol_length(), n_fft[mu] + n_cp[mu]);
        EXPECT_DOUBLE_EQ(n.delta_f, 15e3 * (1 << mu));
        EXPECT_DOUBLE_EQ(n.bandwidth(), 61.44e6);
        EXPECT_TRUE(n.fully_active());
        EXPECT_EQ(n.active_set.front(), 0);
        EXPECT_EQ(n.active_set.back(), n.n_fft - 1);
    }
}

TEST(Numerology, RejectsOutOfCatalog) {
    EXPECT_THROW((void)numerology_from_index(-1), UnsupportedNumerology);
    EXPECT_THROW((void)numerology_from_index(6), UnsupportedNumerology);
}

TEST(Numerology, ActiveSets) {
    const Numerology n = numerology_from_index(5);
    const Numerology half = n.with_active_range(64, 64);
    EXPECT_EQ(half.n_act(), 64);
    EXPECT_EQ(half.active_set.front(), 64);
    EXPECT_EQ(half.active_set.back(), 127);
    EXPECT_THROW((void)n.with_active_set({}), InvalidArgument);
    EXPECT_THROW((void)n.with_active_set({3, 2}), InvalidArgument);
    EXPECT_THROW((void)n.with_active_set({0, 128}), InvalidArgument);
    EXPECT_THROW((void)n.with_active_range(100, 64), InvalidArgument);
}

TEST(NumerologyPair, TilingForEveryCatalogPair) {
    for (int mu1 = 0; mu1 <= 5; ++mu1) {
        for (int mu2 = mu1; mu2 <= 5; ++mu2) {
            const NumerologyPair p = make_pair(numerology_from_index(mu1), numerology_from_index(mu2));
            EXPECT_EQ(p.q, 1 << (mu2 - mu1));
            EXPECT_EQ(p.frame_length(), p.q * p.user2.symbol_length());
            EXPECT_DOUBLE_EQ(p.bandwidth(), p.user2.bandwidth());
        }
    }
}

TEST(NumerologyPair, Rejections) {
    // user 1 must carry the narrower spacing
    EXPECT_THROW((void)make_pair(numerology_from_index(5), numerology_from_index(4)), IncompatibleNumerologies);
    // different base spacing breaks the bandwidth equality
    EXPECT_THROW((void)make_pair(numerology_from_index(4), numerology_from_index(5, 30e3)), IncompatibleNumerologies);
    Numerology odd = numerology_from_index(5);
    odd.n_cp = 10;
    EXPECT_THROW((void)make_pair(numerology_from_index(4), odd), IncompatibleNumerologies);
}
