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

#include "mnnoma/scenario.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace mnnoma {

namespace {

using nlohmann::json;

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "user1_numerology", "user2_numerology", "user1_channel",    "user2_channel",  "snr_db",
        "q_sweep",          "sweep_snr_db",     "trials",           "seed",           "power_grid_step",
        "sn_noma",          "mn_oma",           "sn_oma",           "sn_reference",   "guard_band",
        "ideal_oma",        "sampling_rate_hz", "delta_f_base_hz",  "total_power",    "cp_overhead",
        "flat_channels",    "validation_frames", "threads",         "output_dir"};
    return keys;
}

template <class T>
void read(const json& doc, const char* key, T& dst) {
    if (auto it = doc.find(key); it != doc.end()) {
        dst = it->get<T>();
    }
}

} // namespace

void Scenario::validate() const {
    auto fail = [](const std::string& msg) { throw ConfigError(msg); };
    for (int mu : {user1_numerology, user2_numerology}) {
        if (mu < 0 || mu > kMaxNumerologyIndex) {
            fail("numerology " + std::to_string(mu) + " is not in the catalog (0..5)");
        }
    }
    if (user1_numerology > user2_numerology) {
        fail("user 1 must use the narrower subcarrier spacing (user1_numerology <= user2_numerology)");
    }
    if (trials < 1) {
        fail("trials must be at least 1");
    }
    if (snr_db.empty()) {
        fail("snr_db grid must not be empty");
    }
    for (int q : q_sweep) {
        if (q < 1 || !std::has_single_bit(static_cast<unsigned>(q))) {
            fail("q_sweep entries must be powers of two, got " + std::to_string(q));
        }
    }
    if (!(power_grid_step > 0.0 && power_grid_step < 1.0)) {
        fail("power_grid_step must lie in (0, 1)");
    }
    if (guard_band < 0) {
        fail("guard_band must be nonnegative");
    }
    if (sampling_rate_hz && !(*sampling_rate_hz > 0.0)) {
        fail("sampling_rate_hz must be positive");
    }
    if (!(delta_f_base_hz > 0.0) || !(total_power > 0.0)) {
        fail("delta_f_base_hz and total_power must be positive");
    }
    if (validation_frames < 100) {
        fail("validation_frames must be at least 100");
    }
    if (threads < 0) {
        fail("threads must be nonnegative");
    }
}

NumerologyPair Scenario::numerology_pair() const {
    return numerology_pair(user1_numerology, user2_numerology);
}

NumerologyPair Scenario::numerology_pair(int user1_mu, int user2_mu) const {
    try {
        return make_pair(numerology_from_index(user1_mu, delta_f_base_hz), numerology_from_index(user2_mu, delta_f_base_hz));
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
}

TapProfile Scenario::profile(int user) const {
    if (flat_channels) {
        return flat_profile();
    }
    return resolve_profile(user == 1 ? user1_channel : user2_channel);
}

double Scenario::sampling_rate(const NumerologyPair& pair) const {
    if (sampling_rate_hz) {
        return *sampling_rate_hz;
    }
    const double max_delay = std::max(profile(1).max_delay(), profile(2).max_delay());
    return default_sampling_rate(pair.bandwidth(), max_delay, std::min(pair.user1.n_cp, pair.user2.n_cp));
}

Scenario scenario_from_json(const std::string& text) {
    Scenario s;
    try {
        const json doc = json::parse(text);
        if (!doc.is_object()) {
            throw ConfigError("scenario must be a JSON object");
        }
        for (const auto& [key, value] : doc.items()) {
            if (known_keys().count(key) == 0) {
                throw ConfigError("unknown scenario key '" + key + "'");
            }
        }
        read(doc, "user1_numerology", s.user1_numerology);
        read(doc, "user2_numerology", s.user2_numerology);
        read(doc, "user1_channel", s.user1_channel);
        read(doc, "user2_channel", s.user2_channel);
        read(doc, "snr_db", s.snr_db);
        read(doc, "q_sweep", s.q_sweep);
        read(doc, "sweep_snr_db", s.sweep_snr_db);
        read(doc, "trials", s.trials);
        read(doc, "seed", s.seed);
        read(doc, "power_grid_step", s.power_grid_step);
        read(doc, "sn_noma", s.sn_noma);
        read(doc, "mn_oma", s.mn_oma);
        read(doc, "sn_oma", s.sn_oma);
        read(doc, "guard_band", s.guard_band);
        read(doc, "ideal_oma", s.ideal_oma);
        read(doc, "delta_f_base_hz", s.delta_f_base_hz);
        read(doc, "total_power", s.total_power);
        read(doc, "cp_overhead", s.cp_overhead);
        read(doc, "flat_channels", s.flat_channels);
        read(doc, "validation_frames", s.validation_frames);
        read(doc, "threads", s.threads);
        read(doc, "output_dir", s.output_dir);
        if (auto it = doc.find("sn_reference"); it != doc.end()) {
            const auto ref = it->get<std::string>();
            if (ref == "user1") {
                s.sn_reference = SnReference::User1;
            } else if (ref == "user2") {
                s.sn_reference = SnReference::User2;
            } else {
                throw ConfigError("sn_reference must be \"user1\" or \"user2\"");
            }
        }
        if (auto it = doc.find("sampling_rate_hz"); it != doc.end() && !it->is_null()) {
            s.sampling_rate_hz = it->get<double>();
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed scenario: ") + e.what());
    }
    s.validate();
    return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open scenario " + path.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return scenario_from_json(ss.str());
}

std::string scenario_to_json(const Scenario& s) {
    json doc = {
        {"user1_numerology", s.user1_numerology},
        {"user2_numerology", s.user2_numerology},
        {"user1_channel", s.user1_channel},
        {"user2_channel", s.user2_channel},
        {"snr_db", s.snr_db},
        {"q_sweep", s.q_sweep},
        {"sweep_snr_db", s.sweep_snr_db},
        {"trials", s.trials},
        {"seed", s.seed},
        {"power_grid_step", s.power_grid_step},
        {"sn_noma", s.sn_noma},
        {"mn_oma", s.mn_oma},
        {"sn_oma", s.sn_oma},
        {"sn_reference", s.sn_reference == SnReference::User1 ? "user1" : "user2"},
        {"guard_band", s.guard_band},
        {"ideal_oma", s.ideal_oma},
        {"sampling_rate_hz", s.sampling_rate_hz ? json(*s.sampling_rate_hz) : json(nullptr)},
        {"delta_f_base_hz", s.delta_f_base_hz},
        {"total_power", s.total_power},
        {"cp_overhead", s.cp_overhead},
        {"flat_channels", s.flat_channels},
        {"validation_frames", s.validation_frames},
        {"threads", s.threads},
        {"output_dir", s.output_dir},
    };
    return doc.dump(2);
}

} // namespace mnnoma
