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

#include <cmath>
#include <filesystem>

#include <gtest/gtest.h>

#include "mnnoma/csv.hpp"
#include "mnnoma/experiment.hpp"
#include "oracles/dense_oracles.hpp"

using namespace mnnoma;

namespace {

Scenario small(const std::string& tag) {
    Scenario s;
    s.trials = 6;
    s.snr_db = {0.0, 10.0};
    s.threads = 2;
    s.output_dir = (std::filesystem::temp_directory_path() / ("mnnoma_exp_" + tag)).string();
    return s;
}

} // namespace

TEST(Experiment, SeVsSnrShapeAndConsistency) {
    Scenario s = small("snr");
    s.sn_oma = true;
    const SeResult r = run_se_vs_snr(s);
    // MN-NOMA x2, SN-NOMA x2, MN-OMA, SN-OMA
    EXPECT_EQ(r.rows.size(), 2U * 6U * 6U);
    EXPECT_EQ(r.summary.size(), 2U * 6U);
    for (const auto& row : r.rows) {
        EXPECT_TRUE(std::isfinite(row.se));
        EXPECT_GE(row.se, 0.0);
        EXPECT_NEAR(row.se, (row.rate1 + row.rate2) / 61.44e6, 1e-12 * row.se);
    }
    for (const auto& cell : r.summary) {
        double acc = 0.0;
        int n = 0;
        for (const auto& row : r.rows) {
            if (row.snr_db == cell.snr_db && row.scheme == cell.scheme && row.ordering == cell.ordering) {
                acc += row.se;
                ++n;
            }
        }
        EXPECT_EQ(n, 6);
        EXPECT_NEAR(acc / n, cell.mean_se, 1e-9);
    }
    const auto rows = read_csv(std::filesystem::path(s.output_dir) / "se_vs_snr.csv");
    EXPECT_EQ(rows.size(), r.rows.size() + 1);
    EXPECT_EQ(rows[0].size(), 9U);
    EXPECT_TRUE(std::filesystem::exists(std::filesystem::path(s.output_dir) / "se_vs_snr.svg"));
    EXPECT_TRUE(std::filesystem::exists(std::filesystem::path(s.output_dir) / "se_vs_snr_summary.csv"));
}

TEST(Experiment, ThreadCountDoesNotChangeResults) {
    Scenario a = small("t1");
    a.threads = 1;
    Scenario b = small("t3");
    b.threads = 3;
    const auto ra = compute_se_vs_snr(a);
    const auto rb = compute_se_vs_snr(b);
    ASSERT_EQ(ra.rows.size(), rb.rows.size());
    for (std::size_t i = 0; i < ra.rows.size(); ++i) {
        EXPECT_EQ(ra.rows[i].se, rb.rows[i].se);
        EXPECT_EQ(ra.rows[i].alpha, rb.rows[i].alpha);
    }
}

TEST(Experiment, QSweepPointMatchesSnrSweep) {
    Scenario s = small("q");
    s.user1_numerology = 3;
    s.user2_numerology = 4;
    s.q_sweep = {2, 4};
    s.sweep_snr_db = 10.0;
    const SeResult q = compute_se_vs_q(s);
    EXPECT_EQ(q.summary.size(), 2U * 5U);
    const SeResult snr = compute_se_vs_snr(s);
    for (Scheme sc : {Scheme::MnNoma, Scheme::SnNoma}) {
        for (int o : {1, 2}) {
            EXPECT_NEAR(q.mean_se(10.0, 2, sc, o), snr.mean_se(10.0, 2, sc, o), 1e-12);
        }
    }
    EXPECT_NEAR(q.mean_se(10.0, 2, Scheme::MnOma, 0), snr.mean_se(10.0, 2, Scheme::MnOma, 0), 1e-12);
    EXPECT_THROW((void)q.mean_se(10.0, 8, Scheme::MnNoma, 1), InvalidArgument);

    s.q_sweep = {8}; // numerology 3 + 3 is outside the catalog
    EXPECT_THROW((void)compute_se_vs_q(s), ConfigError);
}

TEST(Experiment, MseOutputs) {
    const Scenario s = small("mse");
    const MseResult r = run_mse(s);
    EXPECT_EQ(r.cfr1_sq.size(), 256);
    EXPECT_EQ(r.mse_ord2.size(), 2U);
    const auto rows = read_csv(std::filesystem::path(s.output_dir) / "mse.csv");
    EXPECT_EQ(rows.size(), 1U + 256U + 128U);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"user", "subcarrier", "cfr_sq", "mse_ord1", "mse_ord2_mean"}));
    const auto per_m = read_csv(std::filesystem::path(s.output_dir) / "mse_per_symbol.csv");
    EXPECT_EQ(per_m.size(), 1U + 2U * 128U);
    // CFR traces agree with a direct transform of the drawn taps
    EXPECT_LT((r.cfr1_sq - oracle::cfr(r.channels.h1.h, 256).cwiseAbs2()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Experiment, MseSameNumerologyEqualsOtherUsersCfr) {
    Scenario s = small("mse_q1");
    s.user2_numerology = 4;
    const MseResult r = compute_mse(s);
    EXPECT_LT((r.mse_ord1.gamma - r.cfr2_sq).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT((r.mse_ord2_mean.gamma - r.cfr1_sq).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Experiment, InadmissibleChannelNamesRateAndCp) {
    Scenario s = small("bad");
    s.sampling_rate_hz = 61.44e6;
    ASSERT_TRUE(admissibility_warning(s, s.numerology_pair()).has_value());
    try {
        (void)compute_mse(s);
        FAIL() << "expected ChannelTooLong";
    } catch (const ChannelTooLong& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("fs = "), std::string::npos) << msg;
        EXPECT_NE(msg.find("9-sample CP"), std::string::npos) << msg;
    }
    EXPECT_FALSE(admissibility_warning(small("ok"), small("ok").numerology_pair()).has_value());
}
