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

#include "mnnoma/channel.hpp"
#include "mnnoma/validation.hpp"
#include "oracles/dense_oracles.hpp"
#include "test_support.hpp"

using namespace mnnoma;

TEST(Validation, FrequencyDomainChannelMatchesDenseProduct) {
    std::mt19937_64 rng(71);
    const Numerology num = numerology_from_index(5);
    const CVector h = testing_support::random_taps(rng, 9);
    const CMatrix f = oracle::dft(num.n_fft);
    const CMatrix want = f * oracle::cp_strip(num.n_fft, num.n_cp) * oracle::toeplitz(h, num.symbol_length()) *
                         oracle::cp_insert(num.n_fft, num.n_cp) * f.adjoint();
    EXPECT_LT(testing_support::max_abs_diff(frequency_domain_channel(num, h), want), 1e-12);
    EXPECT_THROW((void)frequency_domain_channel(num, CVector::Ones(11)), ChannelTooLong);
}

TEST(Validation, DenseReferencesMatchOracles) {
    std::mt19937_64 rng(72);
    const NumerologyPair pair = make_pair(numerology_from_index(4), numerology_from_index(5));
    const CVector h = testing_support::random_taps(rng, 8);
    const ChannelMatrix hm(h, pair.frame_length());
    EXPECT_LT(testing_support::max_abs_diff(dense_ini_ordering1(hm, pair), oracle::gamma_ordering1(h, pair)), 1e-12);
    EXPECT_LT(testing_support::max_abs_diff(dense_ini_ordering2(hm, pair, 2), oracle::gamma_ordering2(h, pair, 2)),
              1e-12);
}

TEST(Validation, DefaultScenarioPasses) {
    Scenario s;
    const ValidationReport rep = run_validation(s);
    EXPECT_GE(rep.checks.size(), 6U);
    for (const auto& c : rep.checks) {
        EXPECT_TRUE(c.passed) << c.name << " measured " << c.measured;
    }
    EXPECT_TRUE(rep.passed());
    const std::string json = rep.to_json();
    EXPECT_NE(json.find("\"oracle_ordering1\""), std::string::npos);
    EXPECT_NE(json.find("\"tolerance\""), std::string::npos);
}

TEST(Validation, SliceFaultIsCaught) {
    Scenario s;
    ValidationOptions opts;
    opts.fault = IniFault::SliceOffByOne;
    const ValidationReport rep = run_validation(s, opts);
    EXPECT_FALSE(rep.passed());
    for (const auto& c : rep.checks) {
        if (c.name == "oracle_ordering1") {
            EXPECT_FALSE(c.passed);
        }
    }
}
