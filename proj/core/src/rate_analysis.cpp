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

#include "mnnoma/rate_analysis.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace mnnoma {

namespace {

RVector gains_on(const ChannelRealization& h, const Numerology& num) {
    const RVector full = cfr(h, num.n_fft).power();
    RVector out(num.n_act());
    for (int i = 0; i < num.n_act(); ++i) {
        out(i) = full(num.active_set[static_cast<std::size_t>(i)]);
    }
    return out;
}

void require_admissible(const ChannelRealization& h, int user, int ncp) {
    if (!is_admissible(h, ncp)) {
        std::ostringstream msg;
        msg << "channel of user " << user << " spans " << h.n_ch() << " samples at fs = " << h.fs
            << " Hz, longer than the " << ncp << "-sample cyclic prefix";
        throw ChannelTooLong(msg.str());
    }
}

double overhead(const Numerology& num, const RateOptions& opts) {
    return opts.cp_overhead ? static_cast<double>(num.n_fft) / num.symbol_length() : 1.0;
}

double log_sum(const RVector& sinr) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < sinr.size(); ++i) {
        acc += std::log2(1.0 + sinr(i));
    }
    return acc;
}

void finish(RateReport& r, double bandwidth) {
    r.sum_rate = r.rate1 + r.rate2;
    r.se = r.sum_rate / bandwidth;
}

} // namespace

PowerSplit PowerSplit::from_fraction(double alpha, double total) {
    if (!(alpha >= 0.0 && alpha <= 1.0) || !(total >= 0.0)) {
        throw InvalidArgument("power fraction must lie in [0, 1] and the budget must be nonnegative");
    }
    const double p1 = alpha * total;
    return PowerSplit{p1, total - p1, total};
}

std::string_view scheme_name(Scheme s) noexcept {
    switch (s) {
    case Scheme::MnNoma:
        return "MN-NOMA";
    case Scheme::SnNoma:
        return "SN-NOMA";
    case Scheme::MnOma:
        return "MN-OMA";
    case Scheme::SnOma:
        return "SN-OMA";
    }
    return "?";
}

LinkState analyze_link(const ChannelRealization& h1, const ChannelRealization& h2, const NumerologyPair& pair,
                       IniFault fault) {
    require_admissible(h1, 1, pair.user2.n_cp);
    require_admissible(h2, 2, pair.user2.n_cp);
    const int frame = pair.frame_length();

    LinkState link;
    link.user1 = pair.user1;
    link.user2 = pair.user2;
    link.q = pair.q;
    link.bandwidth = pair.bandwidth();
    link.gain1 = gains_on(h1, pair.user1);
    link.gain2 = gains_on(h2, pair.user2);
    link.mse_user1 = mse_ordering1(toeplitz_matrix(h2, frame), pair, fault);
    link.mse_user2 = mse_ordering2(toeplitz_matrix(h1, frame), pair);
    return link;
}

RVector sinr_first_decoded(double p_own, double p_other, const RVector& gain, const MseVector& mse, double n0) {
    if (gain.size() != mse.gamma.size()) {
        throw DimensionMismatch("gain and MSE vectors differ in length");
    }
    if (!(n0 > 0.0)) {
        throw InvalidArgument("noise PSD must be positive");
    }
    return (p_own * gain.array() / (p_other * mse.gamma.array() + n0)).matrix();
}

double rate_first_decoded(const Numerology& num, const RVector& sinr, double bandwidth, const RateOptions& opts) {
    if ((sinr.array() < 0.0).any()) {
        throw InvalidArgument("SINR entries must be nonnegative");
    }
    return overhead(num, opts) * bandwidth / num.n_fft * log_sum(sinr);
}

double rate_first_decoded(const Numerology& num, const std::vector<RVector>& sinr_per_symbol, double bandwidth,
                          const RateOptions& opts) {
    if (sinr_per_symbol.empty()) {
        throw InvalidArgument("need at least one short symbol");
    }
    double acc = 0.0;
    for (const auto& s : sinr_per_symbol) {
        acc += rate_first_decoded(num, s, bandwidth, opts);
    }
    return acc / static_cast<double>(sinr_per_symbol.size());
}

double rate_second_decoded(const Numerology& num, const RVector& gain, double power, double n0, double bandwidth,
                           const RateOptions& opts) {
    if (!(n0 > 0.0)) {
        throw InvalidArgument("noise PSD must be positive");
    }
    const RVector snr = power * gain / n0;
    return rate_first_decoded(num, snr, bandwidth, opts);
}

RateReport evaluate_noma(const LinkState& link, Ordering ordering, const PowerSplit& split, double n0,
                         const RateOptions& opts, Scheme scheme) {
    RateReport r;
    r.scheme = scheme;
    r.ordering = static_cast<int>(ordering);
    r.split = split;
    r.noise_psd = n0;
    if (ordering == Ordering::User1First) {
        r.user1_interfered = true;
        r.sinr1 = sinr_first_decoded(split.p1, split.p2, link.gain1, link.mse_user1, n0);
        r.sinr2 = {split.p2 * link.gain2 / n0};
        r.rate1 = rate_first_decoded(link.user1, r.sinr1, link.bandwidth, opts);
        r.rate2 = rate_second_decoded(link.user2, link.gain2, split.p2, n0, link.bandwidth, opts);
    } else {
        r.user2_interfered = true;
        r.sinr1 = split.p1 * link.gain1 / n0;
        r.sinr2.reserve(link.mse_user2.size());
        for (const auto& mse : link.mse_user2) {
            r.sinr2.push_back(sinr_first_decoded(split.p2, split.p1, link.gain2, mse, n0));
        }
        r.rate1 = rate_second_decoded(link.user1, link.gain1, split.p1, n0, link.bandwidth, opts);
        r.rate2 = rate_first_decoded(link.user2, r.sinr2, link.bandwidth, opts);
    }
    finish(r, link.bandwidth);
    return r;
}

std::vector<double> power_grid(double step) {
    if (!(step > 0.0 && step < 1.0)) {
        throw InvalidArgument("power grid step must lie in (0, 1)");
    }
    const double inv = 1.0 / step;
    const double nearest = std::round(inv);
    // 1/step within round-off of an integer K gives exactly K - 1 interior points
    const auto intervals = static_cast<long long>(std::abs(inv - nearest) < 1e-9 * nearest ? nearest : std::ceil(inv));
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(intervals));
    for (long long k = 1; k < intervals; ++k) {
        grid.push_back(static_cast<double>(k) * step);
    }
    return grid;
}

SearchResult exhaustive_power_search(const LinkState& link, Ordering ordering, double n0, double total_power,
                                     double grid_step, const RateOptions& opts, Scheme scheme) {
    const auto grid = power_grid(grid_step);
    SearchResult best;
    best.candidates = static_cast<int>(grid.size());
    bool have = false;
    for (double alpha : grid) {
        const auto split = PowerSplit::from_fraction(alpha, total_power);
        RateReport r = evaluate_noma(link, ordering, split, n0, opts, scheme);
        if (!have || r.sum_rate > best.report.sum_rate * (1.0 + kTieTolerance)) {
            best.split = split;
            best.report = std::move(r);
            have = true;
        }
    }
    if (!have) {
        throw InvalidArgument("power grid is empty");
    }
    return best;
}

SearchResult exhaustive_power_search(const ChannelRealization& h1, const ChannelRealization& h2,
                                     const NumerologyPair& pair, Ordering ordering, double n0, double total_power,
                                     double grid_step) {
    return exhaustive_power_search(analyze_link(h1, h2, pair), ordering, n0, total_power, grid_step);
}

NumerologyPair single_numerology_pair(const NumerologyPair& pair, SnReference ref) {
    const Numerology& base = ref == SnReference::User1 ? pair.user1 : pair.user2;
    return make_pair(base, base);
}

OmaLayout oma_layout(const Numerology& user1, const Numerology& user2, int guard_band) {
    if (user1.n_fft < 2 || user2.n_fft < 2) {
        throw InvalidArgument("OMA needs at least two subcarriers per user");
    }
    const int half1 = user1.n_fft / 2;
    const int half2 = user2.n_fft / 2;
    if (guard_band < 0 || guard_band > half2) {
        throw InvalidArgument("guard band of " + std::to_string(guard_band) +
                              " subcarriers does not fit user 2's half band of " + std::to_string(half2));
    }
    OmaLayout out;
    out.user1 = user1.with_active_range(0, half1);
    out.user2 = user2;
    out.user2.active_set.clear();
    for (int k = half2 + guard_band; k < user2.n_fft; ++k) {
        out.user2.active_set.push_back(k);
    }
    out.q = user1.n_fft / user2.n_fft;
    return out;
}

LinkState analyze_oma_link(const ChannelRealization& h1, const ChannelRealization& h2, const OmaLayout& layout,
                           bool ideal) {
    const int min_cp = std::min(layout.user1.n_cp, layout.user2.n_cp);
    require_admissible(h1, 1, min_cp);
    require_admissible(h2, 2, min_cp);

    LinkState link;
    link.user1 = layout.user1;
    link.user2 = layout.user2;
    link.q = layout.q;
    link.bandwidth = layout.user1.bandwidth();
    link.gain1 = gains_on(h1, layout.user1);
    link.gain2 = gains_on(h2, layout.user2);

    const bool silent2 = layout.user2.active_set.empty();
    if (ideal || silent2) {
        link.mse_user1.gamma = RVector::Zero(layout.user1.n_act());
        link.mse_user2.assign(static_cast<std::size_t>(layout.q), MseVector{RVector::Zero(layout.user2.n_act())});
        return link;
    }
    const NumerologyPair pair = make_pair(layout.user1, layout.user2);
    const int frame = pair.frame_length();
    link.mse_user1 = mse_ordering1(toeplitz_matrix(h2, frame), pair);
    link.mse_user2 = mse_ordering2(toeplitz_matrix(h1, frame), pair);
    return link;
}

RateReport evaluate_oma(const LinkState& link, double n0, double total_power, Scheme scheme,
                        const RateOptions& opts) {
    RateReport r;
    r.scheme = scheme;
    r.ordering = 0;
    r.split = PowerSplit::from_fraction(0.5, total_power);
    r.noise_psd = n0;
    r.user1_interfered = true;
    r.user2_interfered = true;
    r.sinr1 = sinr_first_decoded(r.split.p1, r.split.p2, link.gain1, link.mse_user1, n0);
    r.rate1 = rate_first_decoded(link.user1, r.sinr1, link.bandwidth, opts);
    if (link.user2.active_set.empty()) {
        r.sinr2 = {RVector()};
        r.rate2 = 0.0;
    } else {
        for (const auto& mse : link.mse_user2) {
            r.sinr2.push_back(sinr_first_decoded(r.split.p2, r.split.p1, link.gain2, mse, n0));
        }
        r.rate2 = rate_first_decoded(link.user2, r.sinr2, link.bandwidth, opts);
    }
    finish(r, link.bandwidth);
    return r;
}

RateReport baseline_rates(Scheme kind, const BaselineInputs& in) {
    switch (kind) {
    case Scheme::SnNoma: {
        const auto link = analyze_link(in.h1, in.h2, single_numerology_pair(in.pair, in.sn_reference));
        return exhaustive_power_search(link, in.ordering, in.n0, in.total_power, in.grid_step, in.rate,
                                       Scheme::SnNoma)
            .report;
    }
    case Scheme::MnOma: {
        const auto layout = oma_layout(in.pair.user1, in.pair.user2, in.guard_band);
        return evaluate_oma(analyze_oma_link(in.h1, in.h2, layout, in.ideal_oma), in.n0, in.total_power,
                            Scheme::MnOma, in.rate);
    }
    case Scheme::SnOma: {
        const Numerology& ref = in.sn_reference == SnReference::User1 ? in.pair.user1 : in.pair.user2;
        const auto layout = oma_layout(ref, ref, 0);
        return evaluate_oma(analyze_oma_link(in.h1, in.h2, layout, true), in.n0, in.total_power, Scheme::SnOma,
                            in.rate);
    }
    case Scheme::MnNoma:
        break;
    }
    throw InvalidArgument("MN-NOMA is not a baseline; use exhaustive_power_search");
}

} // namespace mnnoma
