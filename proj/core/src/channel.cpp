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

#include "mnnoma/channel.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <string>

#include <json.hpp>

namespace mnnoma {

namespace {

TapProfile from_ns(std::string name, std::initializer_list<double> delays_ns,
                   std::initializer_list<double> powers_db) {
    TapProfile p;
    p.name = std::move(name);
    for (double d : delays_ns) {
        p.delays.push_back(d * 1e-9);
    }
    p.powers_db.assign(powers_db);
    return p;
}

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

} // namespace

void TapProfile::validate() const {
    if (delays.empty() || delays.size() != powers_db.size()) {
        throw InvalidArgument("tap profile '" + name + "' needs equally many delays and powers");
    }
    for (std::size_t i = 0; i < delays.size(); ++i) {
        if (!(delays[i] >= 0.0) || !std::isfinite(delays[i]) || !std::isfinite(powers_db[i])) {
            throw InvalidArgument("tap profile '" + name + "' has a negative or non-finite entry");
        }
        if (i > 0 && delays[i] <= delays[i - 1]) {
            throw InvalidArgument("tap profile '" + name + "' delays must be strictly increasing");
        }
    }
}

double TapProfile::max_delay() const {
    return delays.empty() ? 0.0 : delays.back();
}

// TS 36.101 / 36.104 Annex B.2
TapProfile epa_profile() {
    return from_ns("EPA", {0, 30, 70, 90, 110, 190, 410}, {0.0, -1.0, -2.0, -3.0, -8.0, -17.2, -20.8});
}

TapProfile eva_profile() {
    return from_ns("EVA", {0, 30, 150, 310, 370, 710, 1090, 1730, 2510},
                   {0.0, -1.5, -1.4, -3.6, -0.6, -9.1, -7.0, -12.0, -16.9});
}

TapProfile flat_profile() {
    return from_ns("FLAT", {0}, {0.0});
}

TapProfile builtin_profile(std::string_view name) {
    const std::string key = upper(name);
    if (key == "EPA") {
        return epa_profile();
    }
    if (key == "EVA") {
        return eva_profile();
    }
    if (key == "FLAT") {
        return flat_profile();
    }
    throw ConfigError("unknown channel profile '" + std::string(name) + "'");
}

TapProfile load_profile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open tap profile " + path.string());
    }
    TapProfile p;
    try {
        const auto doc = nlohmann::json::parse(in);
        p.name = doc.value("name", path.stem().string());
        p.normalize = doc.value("normalize", true);
        for (const auto& tap : doc.at("taps")) {
            if (!tap.is_array() || tap.size() != 2) {
                throw ConfigError("each tap must be a [delay_ns, power_db] pair");
            }
            p.delays.push_back(tap[0].get<double>() * 1e-9);
            p.powers_db.push_back(tap[1].get<double>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("malformed tap profile " + path.string() + ": " + e.what());
    }
    try {
        p.validate();
    } catch (const InvalidArgument& e) {
        throw ConfigError(e.what());
    }
    return p;
}

TapProfile resolve_profile(const std::string& name_or_path) {
    const std::string key = upper(name_or_path);
    if (key == "EPA" || key == "EVA" || key == "FLAT") {
        return builtin_profile(key);
    }
    return load_profile(name_or_path);
}

int max_tap_index(const TapProfile& profile, double fs) {
    return static_cast<int>(std::lround(profile.max_delay() * fs));
}

ChannelRealization draw_realization(const TapProfile& profile, double fs, Rng& rng) {
    if (!(fs > 0.0)) {
        throw InvalidArgument("sampling rate must be positive");
    }
    profile.validate();

    std::vector<double> linear(profile.powers_db.size());
    std::transform(profile.powers_db.begin(), profile.powers_db.end(), linear.begin(),
                   [](double db) { return std::pow(10.0, db / 10.0); });
    if (profile.normalize) {
        double total = 0.0;
        for (double p : linear) {
            total += p;
        }
        for (double& p : linear) {
            p /= total;
        }
    }

    ChannelRealization out;
    out.fs = fs;
    out.seed_tag = profile.name;
    out.h = CVector::Zero(max_tap_index(profile, fs) + 1);
    for (std::size_t i = 0; i < linear.size(); ++i) {
        const auto idx = std::lround(profile.delays[i] * fs);
        out.h(idx) += complex_gaussian(rng, linear[i]);
    }
    return out;
}

double default_sampling_rate(double bandwidth, double max_delay, int min_ncp) {
    if (!(bandwidth > 0.0) || max_delay < 0.0 || min_ncp < 0) {
        throw InvalidArgument("sampling-rate search needs positive bandwidth and nonnegative delay/CP");
    }
    double fs = bandwidth;
    // a zero-delay tap always fits, so this terminates once max_delay * fs < 0.5
    while (std::lround(max_delay * fs) > min_ncp) {
        fs /= 2.0;
    }
    return fs;
}

ChannelMatrix::ChannelMatrix(CVector taps, int size) : taps_(std::move(taps)), size_(size) {
    if (taps_.size() == 0) {
        throw InvalidArgument("channel needs at least one tap");
    }
    if (taps_.size() > size_) {
        throw ChannelTooLong("channel of " + std::to_string(taps_.size()) + " taps does not fit a frame of " +
                             std::to_string(size_) + " samples");
    }
}

CMatrix ChannelMatrix::dense() const {
    CMatrix m = CMatrix::Zero(size_, size_);
    for (int lag = 0; lag <= n_ch(); ++lag) {
        for (int c = 0; c + lag < size_; ++c) {
            m(c + lag, c) = taps_(lag);
        }
    }
    return m;
}

CVector ChannelMatrix::apply(const CVector& x) const {
    if (x.size() != size_) {
        throw DimensionMismatch("channel input has " + std::to_string(x.size()) + " samples, expected " +
                                std::to_string(size_));
    }
    CVector y = CVector::Zero(size_);
    for (int lag = 0; lag <= n_ch(); ++lag) {
        const cd g = taps_(lag);
        if (g == cd{}) {
            continue;
        }
        y.tail(size_ - lag) += g * x.head(size_ - lag);
    }
    return y;
}

ChannelMatrix toeplitz_matrix(const ChannelRealization& h, int size) {
    return ChannelMatrix(h.h, size);
}

Cfr cfr(const CVector& h, int n) {
    if (n < h.size()) {
        throw ChannelTooLong("CFR size " + std::to_string(n) + " is shorter than the channel (" +
                             std::to_string(h.size()) + " taps)");
    }
    Cfr out;
    out.psi = CVector::Zero(n);
    for (int k = 0; k < n; ++k) {
        cd acc{};
        for (Eigen::Index l = 0; l < h.size(); ++l) {
            const double phase = -2.0 * kPi * static_cast<double>((static_cast<long long>(k) * l) % n) / n;
            acc += h(l) * std::polar(1.0, phase);
        }
        out.psi(k) = acc;
    }
    return out;
}

Cfr cfr(const ChannelRealization& h, int n) {
    return cfr(h.h, n);
}

} // namespace mnnoma
