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

#include "mnnoma/experiment.hpp"

#include <bit>
#include <cmath>
#include <filesystem>
#include <map>
#include <sstream>
#include <tuple>

#include "mnnoma/csv.hpp"
#include "mnnoma/parallel.hpp"
#include "mnnoma/random.hpp"
#include "mnnoma/svg_plot.hpp"

namespace mnnoma {

namespace {

std::filesystem::path prepare_output(const Scenario& s) {
    const std::filesystem::path dir(s.output_dir);
    std::filesystem::create_directories(dir);
    return dir;
}

void require_admissible(const TrialChannels& ch, const NumerologyPair& pair, double fs) {
    const int ncp = pair.user2.n_cp;
    for (int user : {1, 2}) {
        const auto& h = user == 1 ? ch.h1 : ch.h2;
        if (!is_admissible(h, ncp)) {
            std::ostringstream msg;
            msg << "inadmissible channel for user " << user << ": N_ch = " << h.n_ch() << " samples at fs = " << fs
                << " Hz exceeds the " << ncp << "-sample CP of numerology " << pair.user2.mu;
            throw ChannelTooLong(msg.str());
        }
    }
}

double noise_psd(double total_power, double snr_db) {
    return total_power / std::pow(10.0, snr_db / 10.0);
}

SeRow make_row(int trial, double snr, int q, const RateReport& r) {
    return SeRow{trial, snr, q, r.scheme, r.ordering, r.split.alpha(), r.rate1, r.rate2, r.se};
}

// Reorders per-trial rows (trial-major) into SNR-major order and averages every cell.
SeResult assemble(std::vector<std::vector<SeRow>> per_trial, std::size_t snr_count) {
    SeResult out;
    const std::size_t trials = per_trial.size();
    const std::size_t per_snr = trials == 0 ? 0 : per_trial.front().size() / snr_count;
    for (std::size_t k = 0; k < snr_count; ++k) {
        for (std::size_t t = 0; t < trials; ++t) {
            for (std::size_t j = 0; j < per_snr; ++j) {
                out.rows.push_back(per_trial[t][k * per_snr + j]);
            }
        }
        for (std::size_t j = 0; j < per_snr; ++j) {
            const SeRow& head = per_trial.front()[k * per_snr + j];
            SeSummary sum{head.snr_db, head.q, head.scheme, head.ordering, 0.0, 0.0, 0.0, static_cast<int>(trials)};
            for (std::size_t t = 0; t < trials; ++t) {
                const SeRow& r = per_trial[t][k * per_snr + j];
                sum.mean_se += r.se;
                sum.mean_rate1 += r.rate1;
                sum.mean_rate2 += r.rate2;
            }
            sum.mean_se /= static_cast<double>(trials);
            sum.mean_rate1 /= static_cast<double>(trials);
            sum.mean_rate2 /= static_cast<double>(trials);
            out.summary.push_back(sum);
        }
    }
    return out;
}

std::string series_label(Scheme scheme, int ordering) {
    std::string label(scheme_name(scheme));
    if (ordering > 0) {
        label += " ord " + std::to_string(ordering);
    }
    return label;
}

void write_se_files(const SeResult& res, const std::filesystem::path& dir, const std::string& stem, bool x_is_q,
                    const std::string& title) {
    {
        CsvWriter csv(dir / (stem + ".csv"),
                      {"trial", "snr_db", "q", "scheme", "ordering", "alpha", "rate1_bps", "rate2_bps", "se_bps_hz"});
        for (const auto& r : res.rows) {
            csv.field(r.trial).field(r.snr_db).field(r.q).field(scheme_name(r.scheme)).field(r.ordering);
            csv.field(r.alpha).field(r.rate1).field(r.rate2).field(r.se);
            csv.end_row();
        }
    }
    {
        CsvWriter csv(dir / (stem + "_summary.csv"),
                      {"snr_db", "q", "scheme", "ordering", "mean_se_bps_hz", "mean_rate1_bps", "mean_rate2_bps",
                       "trials"});
        for (const auto& r : res.summary) {
            csv.field(r.snr_db).field(r.q).field(scheme_name(r.scheme)).field(r.ordering);
            csv.field(r.mean_se).field(r.mean_rate1).field(r.mean_rate2).field(r.trials);
            csv.end_row();
        }
    }
    PlotSpec plot;
    plot.title = title;
    plot.x_label = x_is_q ? "q = N1 / N2" : "SNR [dB]";
    plot.y_label = "Spectral efficiency [bit/s/Hz]";
    std::map<std::pair<int, int>, std::size_t> index;
    for (const auto& r : res.summary) {
        const auto key = std::make_pair(static_cast<int>(r.scheme), r.ordering);
        auto [it, inserted] = index.try_emplace(key, plot.series.size());
        if (inserted) {
            plot.series.push_back(PlotSeries{series_label(r.scheme, r.ordering), {}, {}, true});
        }
        auto& series = plot.series[it->second];
        series.x.push_back(x_is_q ? static_cast<double>(r.q) : r.snr_db);
        series.y.push_back(r.mean_se);
    }
    write_svg_plot(dir / (stem + ".svg"), plot);
}

} // namespace

TrialChannels draw_trial_channels(const Scenario& s, double fs, int trial) {
    Rng r1 = make_stream(s.seed, static_cast<std::uint64_t>(trial), Stream::ChannelUser1);
    Rng r2 = make_stream(s.seed, static_cast<std::uint64_t>(trial), Stream::ChannelUser2);
    TrialChannels ch{draw_realization(s.profile(1), fs, r1), draw_realization(s.profile(2), fs, r2)};
    const std::string tag = "seed=" + std::to_string(s.seed) + ",trial=" + std::to_string(trial);
    ch.h1.seed_tag += ":" + tag;
    ch.h2.seed_tag += ":" + tag;
    return ch;
}

std::optional<std::string> admissibility_warning(const Scenario& s, const NumerologyPair& pair) {
    const double fs = s.sampling_rate(pair);
    const int ncp = std::min(pair.user1.n_cp, pair.user2.n_cp);
    for (int user : {1, 2}) {
        const TapProfile p = s.profile(user);
        const int idx = max_tap_index(p, fs);
        if (idx > ncp) {
            std::ostringstream msg;
            msg << "profile " << p.name << " of user " << user << " reaches sample " << idx << " at fs = " << fs
                << " Hz, beyond the " << ncp << "-sample CP";
            return msg.str();
        }
    }
    return std::nullopt;
}

MseResult compute_mse(const Scenario& s) {
    s.validate();
    MseResult out;
    out.pair = s.numerology_pair();
    out.fs = s.sampling_rate(out.pair);
    out.channels = draw_trial_channels(s, out.fs, 0);
    require_admissible(out.channels, out.pair, out.fs);

    const int frame = out.pair.frame_length();
    out.cfr1_sq = cfr(out.channels.h1, out.pair.user1.n_fft).power();
    out.cfr2_sq = cfr(out.channels.h2, out.pair.user2.n_fft).power();
    out.mse_ord1 = mse_ordering1(toeplitz_matrix(out.channels.h2, frame), out.pair);
    out.mse_ord2 = mse_ordering2(toeplitz_matrix(out.channels.h1, frame), out.pair);
    out.mse_ord2_mean = frame_mse(out.mse_ord2);
    return out;
}

MseResult run_mse(const Scenario& s) {
    MseResult res = compute_mse(s);
    const auto dir = prepare_output(s);
    const auto& pair = res.pair;
    {
        CsvWriter csv(dir / "mse.csv", {"user", "subcarrier", "cfr_sq", "mse_ord1", "mse_ord2_mean"});
        for (int n = 0; n < pair.user1.n_fft; ++n) {
            // the second-decoded user sees no interference
            csv.field(1).field(n).field(res.cfr1_sq(n)).field(res.mse_ord1.gamma(n)).field(0.0);
            csv.end_row();
        }
        for (int n = 0; n < pair.user2.n_fft; ++n) {
            csv.field(2).field(n).field(res.cfr2_sq(n)).field(0.0).field(res.mse_ord2_mean.gamma(n));
            csv.end_row();
        }
    }
    {
        CsvWriter csv(dir / "mse_per_symbol.csv", {"m", "subcarrier", "mse_ord2"});
        for (std::size_t m = 0; m < res.mse_ord2.size(); ++m) {
            for (int n = 0; n < pair.user2.n_fft; ++n) {
                csv.field(static_cast<int>(m + 1)).field(n).field(res.mse_ord2[m].gamma(n));
                csv.end_row();
            }
        }
    }

    auto db = [](double v) { return 10.0 * std::log10(std::max(v, 1e-30)); };
    PlotSpec plot;
    plot.title = "MSE and CFR, numerologies " + std::to_string(pair.user1.mu) + "/" + std::to_string(pair.user2.mu);
    plot.x_label = "Normalized frequency (user-1 subcarrier index)";
    plot.y_label = "dB";
    PlotSeries c1{"|CFR user 1|^2", {}, {}, false};
    PlotSeries m1{"MSE user 1 (ord 1)", {}, {}, false};
    for (int n = 0; n < pair.user1.n_fft; ++n) {
        c1.x.push_back(n);
        c1.y.push_back(db(res.cfr1_sq(n)));
        m1.x.push_back(n);
        m1.y.push_back(db(res.mse_ord1.gamma(n)));
    }
    PlotSeries c2{"|CFR user 2|^2", {}, {}, false};
    PlotSeries m2{"MSE user 2 (ord 2)", {}, {}, false};
    for (int n = 0; n < pair.user2.n_fft; ++n) {
        const double x = static_cast<double>(n) * pair.q;
        c2.x.push_back(x);
        c2.y.push_back(db(res.cfr2_sq(n)));
        m2.x.push_back(x);
        m2.y.push_back(db(res.mse_ord2_mean.gamma(n)));
    }
    plot.series = {c1, m1, c2, m2};
    write_svg_plot(dir / "mse.svg", plot);
    return res;
}

std::vector<SeRow> evaluate_trial(const Scenario& s, const NumerologyPair& pair, double fs, int trial,
                                  const std::vector<double>& snr_db) {
    const TrialChannels ch = draw_trial_channels(s, fs, trial);
    require_admissible(ch, pair, fs);
    const RateOptions opts{s.cp_overhead};

    const LinkState mn = analyze_link(ch.h1, ch.h2, pair);
    std::optional<LinkState> sn;
    if (s.sn_noma) {
        sn = analyze_link(ch.h1, ch.h2, single_numerology_pair(pair, s.sn_reference));
    }
    std::optional<LinkState> mn_oma;
    if (s.mn_oma) {
        mn_oma = analyze_oma_link(ch.h1, ch.h2, oma_layout(pair.user1, pair.user2, s.guard_band), s.ideal_oma);
    }
    std::optional<LinkState> sn_oma;
    if (s.sn_oma) {
        const Numerology& ref = s.sn_reference == SnReference::User1 ? pair.user1 : pair.user2;
        sn_oma = analyze_oma_link(ch.h1, ch.h2, oma_layout(ref, ref, 0), true);
    }

    std::vector<SeRow> rows;
    for (double snr : snr_db) {
        const double n0 = noise_psd(s.total_power, snr);
        for (Ordering o : {Ordering::User1First, Ordering::User2First}) {
            const auto best = exhaustive_power_search(mn, o, n0, s.total_power, s.power_grid_step, opts);
            rows.push_back(make_row(trial, snr, pair.q, best.report));
        }
        if (sn) {
            for (Ordering o : {Ordering::User1First, Ordering::User2First}) {
                const auto best =
                    exhaustive_power_search(*sn, o, n0, s.total_power, s.power_grid_step, opts, Scheme::SnNoma);
                rows.push_back(make_row(trial, snr, pair.q, best.report));
            }
        }
        if (mn_oma) {
            rows.push_back(make_row(trial, snr, pair.q, evaluate_oma(*mn_oma, n0, s.total_power, Scheme::MnOma, opts)));
        }
        if (sn_oma) {
            rows.push_back(make_row(trial, snr, pair.q, evaluate_oma(*sn_oma, n0, s.total_power, Scheme::SnOma, opts)));
        }
    }
    return rows;
}

double SeResult::mean_se(double snr_db, int q, Scheme scheme, int ordering) const {
    for (const auto& r : summary) {
        if (r.snr_db == snr_db && r.q == q && r.scheme == scheme && r.ordering == ordering) {
            return r.mean_se;
        }
    }
    throw InvalidArgument("no summary cell for " + std::string(scheme_name(scheme)) + " ordering " +
                          std::to_string(ordering));
}

SeResult compute_se_vs_snr(const Scenario& s) {
    s.validate();
    const NumerologyPair pair = s.numerology_pair();
    const double fs = s.sampling_rate(pair);
    std::vector<std::vector<SeRow>> per_trial(static_cast<std::size_t>(s.trials));
    parallel_for(per_trial.size(), s.threads, [&](std::size_t t) {
        per_trial[t] = evaluate_trial(s, pair, fs, static_cast<int>(t), s.snr_db);
    });
    return assemble(std::move(per_trial), s.snr_db.size());
}

SeResult run_se_vs_snr(const Scenario& s) {
    SeResult res = compute_se_vs_snr(s);
    write_se_files(res, prepare_output(s), "se_vs_snr", false,
                   "SE vs SNR, numerologies " + std::to_string(s.user1_numerology) + "/" +
                       std::to_string(s.user2_numerology) + ", " + s.user1_channel + "/" + s.user2_channel);
    return res;
}

SeResult compute_se_vs_q(const Scenario& s) {
    s.validate();
    if (s.q_sweep.empty()) {
        throw ConfigError("q_sweep must not be empty for se-vs-q");
    }
    SeResult out;
    for (int q : s.q_sweep) {
        const int mu2 = s.user1_numerology + std::countr_zero(static_cast<unsigned>(q));
        if (mu2 > kMaxNumerologyIndex) {
            throw ConfigError("q = " + std::to_string(q) + " needs numerology " + std::to_string(mu2) +
                              " for user 2, outside the catalog");
        }
        const NumerologyPair pair = s.numerology_pair(s.user1_numerology, mu2);
        const double fs = s.sampling_rate(pair);
        std::vector<std::vector<SeRow>> per_trial(static_cast<std::size_t>(s.trials));
        parallel_for(per_trial.size(), s.threads, [&](std::size_t t) {
            per_trial[t] = evaluate_trial(s, pair, fs, static_cast<int>(t), {s.sweep_snr_db});
        });
        SeResult part = assemble(std::move(per_trial), 1);
        out.rows.insert(out.rows.end(), part.rows.begin(), part.rows.end());
        out.summary.insert(out.summary.end(), part.summary.begin(), part.summary.end());
    }
    return out;
}

SeResult run_se_vs_q(const Scenario& s) {
    SeResult res = compute_se_vs_q(s);
    write_se_files(res, prepare_output(s), "se_vs_q", true,
                   "SE vs q at " + format_double(s.sweep_snr_db) + " dB, user 1 numerology " +
                       std::to_string(s.user1_numerology) + ", " + s.user1_channel + "/" + s.user2_channel);
    return res;
}

} // namespace mnnoma
