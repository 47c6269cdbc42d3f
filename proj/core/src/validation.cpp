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

#include "mnnoma/validation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "mnnoma/channel.hpp"
#include "mnnoma/experiment.hpp"
#include "mnnoma/fft.hpp"
#include "mnnoma/ofdm_ops.hpp"
#include "mnnoma/random.hpp"
#include "mnnoma/rate_analysis.hpp"
#include "mnnoma/sim_chain.hpp"

namespace mnnoma {

namespace {

constexpr double kExactTol = 1e-10;
constexpr double kOracleRelTol = 0.03;
constexpr double kOracleFraction = 0.99;
constexpr std::uint64_t kAuxTrialBase = 1'000'000;

CheckResult at_most(std::string name, double measured, double tol, std::string detail = {}) {
    return CheckResult{std::move(name), measured, tol, "<=", std::isfinite(measured) && measured <= tol,
                       std::move(detail)};
}

CheckResult at_least(std::string name, double measured, double tol, std::string detail = {}) {
    return CheckResult{std::move(name), measured, tol, ">=", std::isfinite(measured) && measured >= tol,
                       std::move(detail)};
}

ChannelRealization aux_draw(const Scenario& s, int user, double fs, std::uint64_t index) {
    Rng rng = make_stream(s.seed, kAuxTrialBase + index, user == 1 ? Stream::ChannelUser1 : Stream::ChannelUser2);
    return draw_realization(s.profile(user), fs, rng);
}

double max_abs(const CMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// Fraction of entries with |measured - expected| <= rel * expected.
double fraction_within(const RVector& measured, const RVector& expected, double rel) {
    int good = 0;
    for (Eigen::Index i = 0; i < expected.size(); ++i) {
        if (std::abs(measured(i) - expected(i)) <= rel * expected(i)) {
            ++good;
        }
    }
    return expected.size() == 0 ? 1.0 : static_cast<double>(good) / static_cast<double>(expected.size());
}

CMatrix block_modulator(const OfdmOperatorSet& ops, int q) {
    const CMatrix one = ops.cp_add.cast<cd>() * ops.fmat.adjoint();
    CMatrix out = CMatrix::Zero(one.rows() * q, one.cols() * q);
    for (int m = 0; m < q; ++m) {
        out.block(m * one.rows(), m * one.cols(), one.rows(), one.cols()) = one;
    }
    return out;
}

// Pair used where the dense reference would be too expensive at the scenario's size.
NumerologyPair dense_check_pair(const Scenario& s, const NumerologyPair& pair) {
    if (pair.user1.n_fft <= 512) {
        return pair;
    }
    constexpr int mu = kMaxNumerologyIndex - 1;
    return s.numerology_pair(mu, pair.q == 1 ? mu : mu + 1);
}

void check_diagonalization(const Scenario& s, const NumerologyPair& pair, double fs, const ValidationOptions& opts,
                           ValidationReport& rep) {
    double offdiag = 0.0;
    double diag_err = 0.0;
    std::uint64_t index = 0;
    for (const Numerology* num : {&pair.user1, &pair.user2}) {
        const Numerology full = numerology_from_index(num->mu, s.delta_f_base_hz);
        for (int d = 0; d < opts.diagonalization_draws; ++d) {
            const ChannelRealization h = aux_draw(s, 1 + d % 2, fs, index++);
            CMatrix t = frequency_domain_channel(full, h.h);
            const Cfr psi = cfr(h, full.n_fft);
            diag_err = std::max(diag_err, (t.diagonal() - psi.psi).cwiseAbs().maxCoeff());
            t.diagonal().setZero();
            offdiag = std::max(offdiag, max_abs(t));
        }
    }
    rep.checks.push_back(at_most("diagonalization_offdiag", offdiag, kExactTol,
                                 "max |off-diagonal| of F Rcp H Acp F^H over both numerologies"));
    rep.checks.push_back(at_most("diagonalization_cfr", diag_err, kExactTol, "max |diagonal - CFR|"));
}

void check_dense_vs_fast(const Scenario& s, const NumerologyPair& scenario_pair, const ValidationOptions& opts,
                         ValidationReport& rep) {
    const NumerologyPair pair = dense_check_pair(s, scenario_pair);
    const double fs = s.sampling_rate(pair);
    const int frame = pair.frame_length();
    const ChannelMatrix h1 = toeplitz_matrix(aux_draw(s, 1, fs, 100), frame);
    const ChannelMatrix h2 = toeplitz_matrix(aux_draw(s, 2, fs, 100), frame);

    const CMatrix g1 = ini_ordering1(h2, pair, opts.fault).gamma_mat;
    const CMatrix d1 = dense_ini_ordering1(h2, pair);
    double err = max_abs(g1 - d1) / std::max(max_abs(d1), 1e-300);
    for (int m = 1; m <= pair.q; ++m) {
        const CMatrix g2 = ini_ordering2(h1, pair, m).gamma_mat;
        const CMatrix d2 = dense_ini_ordering2(h1, pair, m);
        err = std::max(err, max_abs(g2 - d2) / std::max(max_abs(d2), 1e-300));
    }
    rep.checks.push_back(at_most("ini_fast_vs_dense", err, kExactTol,
                                 "relative max deviation of the fast INI kernels from literal matrix products at "
                                 "numerologies " +
                                     std::to_string(pair.user1.mu) + "/" + std::to_string(pair.user2.mu)));
}

void check_reduction(const Scenario& s, const NumerologyPair& pair, ValidationReport& rep) {
    const NumerologyPair same = s.numerology_pair(pair.user1.mu, pair.user1.mu);
    const double fs = s.sampling_rate(same);
    const ChannelRealization h1 = aux_draw(s, 1, fs, 200);
    const ChannelRealization h2 = aux_draw(s, 2, fs, 200);
    const int frame = same.frame_length();
    const int n = same.user1.n_fft;

    const CMatrix g1 = ini_ordering1(toeplitz_matrix(h2, frame), same).gamma_mat;
    const CMatrix g2 = ini_ordering2(toeplitz_matrix(h1, frame), same, 1).gamma_mat;
    const CMatrix e1 = cfr(h2, n).psi.asDiagonal();
    const CMatrix e2 = cfr(h1, n).psi.asDiagonal();
    const double err = std::max(max_abs(g1 - e1), max_abs(g2 - e2));
    rep.checks.push_back(at_most("same_numerology_reduction", err, kExactTol, "q = 1 INI matrices vs diag(CFR)"));

    // MN-NOMA on the (mu, mu) pair against the SN-NOMA baseline path on identical inputs.
    const LinkState link = analyze_link(h1, h2, same);
    int mismatches = 0;
    for (Ordering o : {Ordering::User1First, Ordering::User2First}) {
        for (double snr : {0.0, 10.0, 20.0}) {
            const double n0 = s.total_power / std::pow(10.0, snr / 10.0);
            const auto mn = exhaustive_power_search(link, o, n0, s.total_power, s.power_grid_step);
            BaselineInputs in;
            in.h1 = h1;
            in.h2 = h2;
            in.pair = same;
            in.n0 = n0;
            in.total_power = s.total_power;
            in.grid_step = s.power_grid_step;
            in.ordering = o;
            const RateReport sn = baseline_rates(Scheme::SnNoma, in);
            const auto same_bits = [](double a, double b) {
                return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
            };
            mismatches += !same_bits(mn.report.rate1, sn.rate1) + !same_bits(mn.report.rate2, sn.rate2) +
                          !same_bits(mn.report.se, sn.se);
        }
    }
    rep.checks.push_back(at_most("mn_sn_bitwise_q1", mismatches, 0.0,
                                 "rate fields differing bitwise between MN-NOMA at q = 1 and SN-NOMA"));
}

void check_oracle(const Scenario& s, const NumerologyPair& pair, double fs, const ValidationOptions& opts,
                  ValidationReport& rep) {
    const TrialChannels ch = draw_trial_channels(s, fs, 0);
    const SimChain chain(pair, ch.h1, ch.h2);
    const PowerSplit split = PowerSplit::from_fraction(0.5, s.total_power);
    const int frame = pair.frame_length();

    const MseVector g1 = mse_ordering1(toeplitz_matrix(ch.h2, frame), pair, opts.fault);
    const auto emp1 = chain.empirical_interference(Ordering::User1First, split, s.validation_frames, s.seed, s.threads);
    const double frac1 = fraction_within(emp1.front(), split.p2 * g1.gamma, kOracleRelTol);
    rep.checks.push_back(at_least("oracle_ordering1", frac1, kOracleFraction,
                                  "fraction of user-1 subcarriers where the simulated INI power matches p2 gamma "
                                  "within 3% over " +
                                      std::to_string(s.validation_frames) + " frames"));

    const auto g2 = mse_ordering2(toeplitz_matrix(ch.h1, frame), pair);
    const auto emp2 = chain.empirical_interference(Ordering::User2First, split, s.validation_frames, s.seed, s.threads);
    double frac2 = 1.0;
    for (std::size_t m = 0; m < g2.size(); ++m) {
        frac2 = std::min(frac2, fraction_within(emp2[m], split.p1 * g2[m].gamma, kOracleRelTol));
    }
    rep.checks.push_back(at_least("oracle_ordering2", frac2, kOracleFraction,
                                  "worst-m fraction of user-2 subcarriers where the simulated INI power matches "
                                  "p1 gamma_m within 3%"));
}

void check_genie(const Scenario& s, const NumerologyPair& pair, double fs, ValidationReport& rep) {
    const TrialChannels ch = draw_trial_channels(s, fs, 0);
    const SimChain chain(pair, ch.h1, ch.h2);
    const PowerSplit split = PowerSplit::from_fraction(0.3, s.total_power);
    const CVector psi1 = cfr(ch.h1, pair.user1.n_fft).psi;
    const CVector psi2 = cfr(ch.h2, pair.user2.n_fft).psi;
    const int nact2 = pair.user2.n_act();

    double residual = 0.0;
    for (int f = 0; f < 4; ++f) {
        Rng data1 = make_stream(s.seed, kAuxTrialBase + static_cast<std::uint64_t>(f), Stream::DataUser1);
        Rng data2 = make_stream(s.seed, kAuxTrialBase + static_cast<std::uint64_t>(f), Stream::DataUser2);
        Rng noise = make_stream(s.seed, kAuxTrialBase + static_cast<std::uint64_t>(f), Stream::Noise);
        const FrameSymbols frame = draw_frame_symbols(pair, data1, data2, f);
        const ReceivedFrame rx = chain.synthesize_frame(frame, split, 0.0, noise);

        const auto o1 = chain.genie_sic(rx, frame, split, Ordering::User1First);
        for (int m = 0; m < pair.q; ++m) {
            for (int i = 0; i < nact2; ++i) {
                const int k = pair.user2.active_set[static_cast<std::size_t>(i)];
                const cd want = std::sqrt(split.p2) * psi2(k) * frame.d2_tilde(m * nact2 + i);
                residual = std::max(residual, std::abs(o1.second[static_cast<std::size_t>(m)](i) - want));
            }
        }
        const auto o2 = chain.genie_sic(rx, frame, split, Ordering::User2First);
        for (int i = 0; i < pair.user1.n_act(); ++i) {
            const int k = pair.user1.active_set[static_cast<std::size_t>(i)];
            const cd want = std::sqrt(split.p1) * psi1(k) * frame.d1(i);
            residual = std::max(residual, std::abs(o2.second.front()(i) - want));
        }
    }
    rep.checks.push_back(at_most("genie_sic_residual", residual, kExactTol,
                                 "max deviation of stage-2 observations from the interference-free model"));
}

void check_optimizer(const Scenario& s, const NumerologyPair& pair, double fs, const ValidationOptions& opts,
                     ValidationReport& rep) {
    const double fine_step = s.power_grid_step / 10.0;
    const std::vector<double> fine = power_grid(fine_step);
    double excess = -1.0;
    for (int i = 0; i < opts.optimizer_instances; ++i) {
        const auto idx = static_cast<std::uint64_t>(300 + i);
        const ChannelRealization h1 = aux_draw(s, 1, fs, idx);
        const ChannelRealization h2 = aux_draw(s, 2, fs, idx);
        const LinkState link = analyze_link(h1, h2, pair);
        const Ordering o = i % 2 == 0 ? Ordering::User1First : Ordering::User2First;
        const double snr = 5.0 * (i % 5);
        const double n0 = s.total_power / std::pow(10.0, snr / 10.0);

        const auto coarse = exhaustive_power_search(link, o, n0, s.total_power, s.power_grid_step);
        double best = -1.0;
        double slope = 0.0;
        double prev = 0.0;
        for (std::size_t k = 0; k < fine.size(); ++k) {
            const double se = evaluate_noma(link, o, PowerSplit::from_fraction(fine[k], s.total_power), n0).se;
            best = std::max(best, se);
            if (k > 0) {
                slope = std::max(slope, std::abs(se - prev) / fine_step);
            }
            prev = se;
        }
        const double bound = s.power_grid_step * slope;
        excess = std::max(excess, best - coarse.report.se - bound);
    }
    rep.checks.push_back(at_most("optimizer_fine_grid", excess, 1e-9,
                                 "max of (fine-grid optimum - coarse optimum - step * max slope) in bit/s/Hz"));
}

void check_flat_tie(const Scenario& s, const NumerologyPair& pair, ValidationReport& rep) {
    const NumerologyPair same = s.numerology_pair(pair.user1.mu, pair.user1.mu);
    const ChannelRealization flat{CVector::Ones(1), s.sampling_rate(same), "flat"};
    const LinkState link = analyze_link(flat, flat, same);
    const double n0 = s.total_power / 10.0;
    double spread = 0.0;
    bool smallest = true;
    for (Ordering o : {Ordering::User1First, Ordering::User2First}) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (double a : power_grid(s.power_grid_step)) {
            const double se = evaluate_noma(link, o, PowerSplit::from_fraction(a, s.total_power), n0).se;
            lo = std::min(lo, se);
            hi = std::max(hi, se);
        }
        spread = std::max(spread, (hi - lo) / hi);
        const auto best = exhaustive_power_search(link, o, n0, s.total_power, s.power_grid_step);
        smallest = smallest && best.split.alpha() == power_grid(s.power_grid_step).front();
    }
    CheckResult c = at_most("flat_tie_break", spread, 1e-9,
                            "relative spread of the flat q = 1 sum rate over alpha; the search must return the "
                            "smallest grid alpha");
    c.passed = c.passed && smallest;
    if (!smallest) {
        c.detail += " (tie-break did not pick the smallest alpha)";
    }
    rep.checks.push_back(c);
}

} // namespace

CMatrix frequency_domain_channel(const Numerology& num, const CVector& h) {
    const int n = num.n_fft;
    const int ncp = num.n_cp;
    const int nch = static_cast<int>(h.size()) - 1;
    if (nch > ncp) {
        throw ChannelTooLong("channel with N_ch = " + std::to_string(nch) + " exceeds the " + std::to_string(ncp) +
                             "-sample CP");
    }
    // T = Rcp H Acp: row r sees output sample r + ncp, which gathers input samples r + ncp - l
    // of the CP-extended symbol.
    CMatrix t = CMatrix::Zero(n, n);
    for (int r = 0; r < n; ++r) {
        for (int l = 0; l <= nch; ++l) {
            const int s = r + ncp - l;
            if (s >= ncp) {
                t(r, s - ncp) += h(l);
            } else if (s >= 0) {
                t(r, n - ncp + s) += h(l);
            }
        }
    }
    transform_columns(t, FftDirection::Forward);
    transform_rows(t, FftDirection::Backward);
    t /= static_cast<double>(n);
    return t;
}

CMatrix dense_ini_ordering1(const ChannelMatrix& h2, const NumerologyPair& pair) {
    const auto ops1 = build_operators(pair.user1);
    const auto ops2 = build_operators(pair.user2);
    const CMatrix rx = ops1.fmat * ops1.cp_remove.cast<cd>();
    return rx * h2.dense() * block_modulator(ops2, pair.q);
}

CMatrix dense_ini_ordering2(const ChannelMatrix& h1, const NumerologyPair& pair, int m) {
    const auto ops1 = build_operators(pair.user1);
    const auto ops2 = build_operators(pair.user2);
    const RMatrix sel = slice_matrix(m, pair.q, pair.user2.symbol_length());
    const CMatrix rx = ops2.fmat * (ops2.cp_remove * sel).cast<cd>();
    const CMatrix tx = ops1.cp_add.cast<cd>() * ops1.fmat.adjoint();
    return rx * h1.dense() * tx;
}

bool ValidationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string ValidationReport::to_json() const {
    nlohmann::ordered_json j;
    j["passed"] = passed();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["measured"] = c.measured;
        e["tolerance"] = c.tolerance;
        e["comparison"] = c.comparison;
        e["passed"] = c.passed;
        e["detail"] = c.detail;
        arr.push_back(std::move(e));
    }
    j["checks"] = std::move(arr);
    return j.dump(2) + "\n";
}

ValidationReport run_validation(const Scenario& s, const ValidationOptions& opts) {
    s.validate();
    const NumerologyPair pair = s.numerology_pair();
    const double fs = s.sampling_rate(pair);
    ValidationReport rep;
    check_diagonalization(s, pair, fs, opts, rep);
    check_dense_vs_fast(s, pair, opts, rep);
    check_reduction(s, pair, rep);
    check_oracle(s, pair, fs, opts, rep);
    check_genie(s, pair, fs, rep);
    check_optimizer(s, pair, fs, opts, rep);
    check_flat_tie(s, pair, rep);
    return rep;
}

void write_report(const ValidationReport& report, const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    out << report.to_json();
}

} // namespace mnnoma
