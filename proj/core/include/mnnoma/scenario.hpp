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

#ifndef MNNOMA_SCENARIO_HPP
#define MNNOMA_SCENARIO_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mnnoma/channel.hpp"
#include "mnnoma/numerology.hpp"
#include "mnnoma/rate_analysis.hpp"

namespace mnnoma {

/**
 * Complete description of one experiment. Serialized as a flat JSON object whose keys
 * match the member names; unknown keys are rejected.
 */
struct Scenario {
    int user1_numerology = 4;
    int user2_numerology = 5;
    std::string user1_channel = "EPA"; ///< built-in name or tap-profile file
    std::string user2_channel = "EPA";
    std::vector<double> snr_db = {0, 5, 10, 15, 20};
    std::vector<int> q_sweep = {2, 4, 8, 16}; ///< se-vs-q: user 2 gets numerology user1 + log2(q)
    double sweep_snr_db = 10.0;
    int trials = 200;
    std::uint64_t seed = 1;
    double power_grid_step = 0.01;
    bool sn_noma = true;
    bool mn_oma = true;
    bool sn_oma = false;
    SnReference sn_reference = SnReference::User1;
    int guard_band = 0;
    bool ideal_oma = false;
    std::optional<double> sampling_rate_hz; ///< unset: derived from the profiles and the shortest CP
    double delta_f_base_hz = kDefaultBaseSpacingHz;
    double total_power = 1.0;
    bool cp_overhead = false;
    bool flat_channels = false; ///< replace both profiles by a single unit tap
    int validation_frames = 10000;
    int threads = 0;
    std::string output_dir = "out";

    /// Throws ConfigError on any violated invariant.
    void validate() const;

    [[nodiscard]] NumerologyPair numerology_pair() const;
    [[nodiscard]] NumerologyPair numerology_pair(int user1_mu, int user2_mu) const;
    [[nodiscard]] TapProfile profile(int user) const;

    /// Sampling rate used to place channel taps for the given pair.
    [[nodiscard]] double sampling_rate(const NumerologyPair& pair) const;
};

[[nodiscard]] Scenario scenario_from_json(const std::string& text);
[[nodiscard]] Scenario load_scenario(const std::filesystem::path& path);
[[nodiscard]] std::string scenario_to_json(const Scenario& s);

} // namespace mnnoma

#endif // MNNOMA_SCENARIO_HPP
