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

#ifndef MNNOMA_EXPERIMENT_HPP
#define MNNOMA_EXPERIMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "mnnoma/channel.hpp"
#include "mnnoma/ini_analysis.hpp"
#include "mnnoma/numerology.hpp"
#include "mnnoma/rate_analysis.hpp"
#include "mnnoma/scenario.hpp"

namespace mnnoma {

/// Channel draws of one trial; trial t always uses make_stream(seed, t, ChannelUser{1,2}).
struct TrialChannels {
    ChannelRealization h1;
    ChannelRealization h2;
};

[[nodiscard]] TrialChannels draw_trial_channels(const Scenario& s, double fs, int trial);

/// Message describing a profile/fs combination whose taps overrun the shortest CP, if any.
[[nodiscard]] std::optional<std::string> admissibility_warning(const Scenario& s, const NumerologyPair& pair);

struct MseResult {
    NumerologyPair pair;
    double fs = 0.0;
    TrialChannels channels;
    RVector cfr1_sq; ///< all N1 subcarriers
    RVector cfr2_sq; ///< all N2 subcarriers
    MseVector mse_ord1;
    std::vector<MseVector> mse_ord2;
    MseVector mse_ord2_mean;
};

/// MSE and CFR traces for the trial-0 channel draw.
[[nodiscard]] MseResult compute_mse(const Scenario& s);

/// compute_mse plus mse.csv, mse_per_symbol.csv and mse.svg in s.output_dir.
MseResult run_mse(const Scenario& s);

struct SeRow {
    int trial = 0;
    double snr_db = 0.0;
    int q = 1;
    Scheme scheme = Scheme::MnNoma;
    int ordering = 0;
    double alpha = 0.0;
    double rate1 = 0.0;
    double rate2 = 0.0;
    double se = 0.0;
};

struct SeSummary {
    double snr_db = 0.0;
    int q = 1;
    Scheme scheme = Scheme::MnNoma;
    int ordering = 0;
    double mean_se = 0.0;
    double mean_rate1 = 0.0;
    double mean_rate2 = 0.0;
    int trials = 0;
};

struct SeResult {
    std::vector<SeRow> rows;
    std::vector<SeSummary> summary;

    /// Mean SE of one (snr, q, scheme, ordering) cell; throws if absent.
    [[nodiscard]] double mean_se(double snr_db, int q, Scheme scheme, int ordering) const;
};

/// Rows for every SNR of one trial, ordered by SNR then scheme.
[[nodiscard]] std::vector<SeRow> evaluate_trial(const Scenario& s, const NumerologyPair& pair, double fs, int trial,
                                                const std::vector<double>& snr_db);

[[nodiscard]] SeResult compute_se_vs_snr(const Scenario& s);
SeResult run_se_vs_snr(const Scenario& s);

[[nodiscard]] SeResult compute_se_vs_q(const Scenario& s);
SeResult run_se_vs_q(const Scenario& s);

} // namespace mnnoma

#endif // MNNOMA_EXPERIMENT_HPP
