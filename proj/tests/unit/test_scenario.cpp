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

#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "mnnoma/scenario.hpp"

using namespace mnnoma;

TEST(Scenario, DefaultsAreValid) {
    const Scenario s;
    EXPECT_NO_THROW(s.validate());
    EXPECT_EQ(s.trials, 200);
    EXPECT_EQ(s.numerology_pair().q, 2);
    EXPECT_DOUBLE_EQ(s.sampling_rate(s.numerology_pair()), 15.36e6);
}

TEST(Scenario, SamplingRateUsesLongestProfile) {
    Scenario s;
    s.user2_channel = "EVA";
    EXPECT_DOUBLE_EQ(s.sampling_rate(s.numerology_pair()), 1.92e6);
    s.sampling_rate_hz = 7.68e6;
    EXPECT_DOUBLE_EQ(s.sampling_rate(s.numerology_pair()), 7.68e6);
    s.sampling_rate_hz.reset();
    s.flat_channels = true;
    EXPECT_DOUBLE_EQ(s.sampling_rate(s.numerology_pair()), 61.44e6);
}

TEST(Scenario, JsonRoundTrip) {
    Scenario s;
    s.user1_numerology = 1;
    s.user2_numerology = 3;
    s.user2_channel = "EVA";
    s.snr_db = {10.0};
    s.seed = 77;
    s.sn_reference = SnReference::User2;
    s.sampling_rate_hz = 3.84e6;
    s.guard_band = 4;
    const Scenario back = scenario_from_json(scenario_to_json(s));
    EXPECT_EQ(back.user1_numerology, 1);
    EXPECT_EQ(back.user2_numerology, 3);
    EXPECT_EQ(back.user2_channel, "EVA");
    EXPECT_EQ(back.snr_db, s.snr_db);
    EXPECT_EQ(back.seed, 77U);
    EXPECT_EQ(back.sn_reference, SnReference::User2);
    EXPECT_EQ(back.sampling_rate_hz, s.sampling_rate_hz);
    EXPECT_EQ(back.guard_band, 4);
}

TEST(Scenario, RejectsBadInput) {
    EXPECT_THROW((void)scenario_from_json("[1, 2]"), ConfigError);
    EXPECT_THROW((void)scenario_from_json("{\"trails\": 3}"), ConfigError);
    EXPECT_THROW((void)scenario_from_json("{\"trials\": 0}"), ConfigError);
    EXPECT_THROW((void)scenario_from_json("{\"trials\": \"many\"}"), ConfigError);
    EXPECT_THROW((void)scenario_from_json("{\"snr_db\": []}"), ConfigError);
    EXPECT_THROW((void)scenario_from_json("{\"user2_numerology\": 6}"), ConfigError);
    EXPECT_THROW((void)scenario_from_json("{\"user1_numerology\": 5, \"user2_numerology\": 4}"), ConfigError);
    EXPECT_THROW((void)scenario_from_json("{\"q_sweep\": [3]}"), ConfigError);
    EXPECT_THROW((void)scenario_from_json("{\"power_grid_step\": 1.5}"), ConfigError);
    EXPECT_THROW((void)scenario_from_json("{\"sn_reference\": \"both\"}"), ConfigError);
    EXPECT_THROW((void)scenario_from_json("{not json"), ConfigError);
    EXPECT_THROW((void)load_scenario("/nonexistent/scenario.json"), ConfigError);
}

TEST(Scenario, UnknownProfileIsConfigError) {
    Scenario s;
    s.user1_channel = "ETU";
    EXPECT_THROW((void)s.profile(1), ConfigError);
}

TEST(Scenario, RepositoryConfigsLoad) {
    const std::filesystem::path dir = MNNOMA_SOURCE_DIR "/configs";
    int count = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() == ".json") {
            EXPECT_NO_THROW((void)load_scenario(entry.path())) << entry.path();
            ++count;
        }
    }
    EXPECT_GE(count, 4);
}
