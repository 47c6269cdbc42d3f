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

#include "mnnoma/ini_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <string>

#include "mnnoma/fft.hpp"

namespace mnnoma {

namespace {

// exp(+j 2 pi k / n), k = 0..n-1
std::vector<cd> twiddles(int n) {
    std::vector<cd> t(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        t[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * kPi * k / n);
    }
    return t;
}

inline std::size_t wrap(long long k, int n) {
    long long r = k % n;
    return static_cast<std::size_t>(r < 0 ? r + n : r);
}

// sum_l h_l exp(-j 2 pi a l / n)
cd response_at(const CVector& taps, long long a, const std::vector<cd>& tw, int n) {
    cd acc{};
    for (Eigen::Index l = 0; l < taps.size(); ++l) {
        acc += taps(l) * std::conj(tw[wrap(a * l, n)]);
    }
    return acc;
}

void check_frame(const ChannelMatrix& h, const NumerologyPair& pair) {
    if (h.size() != pair.frame_length()) {
        throw DimensionMismatch("channel matrix is " + std::to_string(h.size()) + " x " + std::to_string(h.size()) +
                                ", expected the frame length " + std::to_string(pair.frame_length()));
    }
}

void check_cp(const ChannelMatrix& h, int ncp, const char* who) {
    if (h.n_ch() > ncp) {
        throw ChannelTooLong(std::string("channel with N_ch = ") + std::to_string(h.n_ch()) + " exceeds the " +
                             std::to_string(ncp) + "-sample CP of " + who);
    }
}

/*
 * Column kernels. Each column of Gamma is the receive-side DFT of one modulated basis
 * function pushed through the channel. A basis function is a CP-extended complex
 * exponential, so away from its edges the convolution reduces to a multiplication by
 * the channel response at that frequency; the edge samples are summed explicitly.
 * sink(column, values) receives the victim-side active-subcarrier values.
 */
template <class Sink>
void ordering1_columns(const ChannelMatrix& h2, const NumerologyPair& pair, IniFault fault, Sink&& sink) {
    const Numerology& u1 = pair.user1;
    const Numerology& u2 = pair.user2;
    const int n1 = u1.n_fft;
    const int ncp1 = u1.n_cp;
    const int l1 = u1.symbol_length();
    const int n2 = u2.n_fft;
    const int ncp2 = u2.n_cp;
    const int l2 = u2.symbol_length();
    const int nch = h2.n_ch();
    const CVector& taps = h2.taps();

    const auto tw2 = twiddles(n2);
    const double scale2 = 1.0 / std::sqrt(static_cast<double>(n2));
    const double scale1 = 1.0 / std::sqrt(static_cast<double>(n1));
    const Fft fft(n1, FftDirection::Forward);
    std::vector<cd> window(static_cast<std::size_t>(n1));
    std::vector<cd> spec(static_cast<std::size_t>(n1));
    CVector column(u1.n_act());

    for (int m = 0; m < pair.q; ++m) {
        const int slot = (fault == IniFault::SliceOffByOne && m > 0) ? m - 1 : m;
        const int start = slot * l2;
        for (int o = 0; o < u2.n_act(); ++o) {
            const long long a = u2.active_set[static_cast<std::size_t>(o)];
            const cd steady = response_at(taps, a, tw2, n2);
            auto basis = [&](int rel) { return scale2 * tw2[wrap(a * (rel - ncp2), n2)]; };

            std::fill(window.begin(), window.end(), cd{});
            const int t_lo = std::max(start, ncp1);
            const int t_hi = std::min(start + l2 + nch, l1);
            for (int t = t_lo; t < t_hi; ++t) {
                const int rel = t - start;
                const int lo = std::max(0, rel - (l2 - 1));
                const int hi = std::min(nch, rel);
                cd v{};
                if (lo == 0 && hi == nch) {
                    v = steady * basis(rel);
                } else {
                    for (int l = lo; l <= hi; ++l) {
                        v += taps(l) * basis(rel - l);
                    }
                }
                window[static_cast<std::size_t>(t - ncp1)] = v;
            }
            fft.execute(window, spec);
            for (int r = 0; r < u1.n_act(); ++r) {
                column(r) = scale1 * spec[static_cast<std::size_t>(u1.active_set[static_cast<std::size_t>(r)])];
            }
            sink(m * u2.n_act() + o, column);
        }
    }
}

// sink(m, o, values) with m zero-based.
template <class Sink>
void ordering2_columns(const ChannelMatrix& h1, const NumerologyPair& pair, Sink&& sink) {
    const Numerology& u1 = pair.user1;
    const Numerology& u2 = pair.user2;
    const int n1 = u1.n_fft;
    const int ncp1 = u1.n_cp;
    const int n2 = u2.n_fft;
    const int ncp2 = u2.n_cp;
    const int l2 = u2.symbol_length();
    const int nch = h1.n_ch();
    const CVector& taps = h1.taps();

    const auto tw1 = twiddles(n1);
    const double scale1 = 1.0 / std::sqrt(static_cast<double>(n1));
    const double scale2 = 1.0 / std::sqrt(static_cast<double>(n2));
    const Fft fft(n2, FftDirection::Forward);
    std::vector<cd> window(static_cast<std::size_t>(n2));
    std::vector<cd> spec(static_cast<std::size_t>(n2));
    CVector column(u2.n_act());

    for (int o = 0; o < u1.n_act(); ++o) {
        const long long a = u1.active_set[static_cast<std::size_t>(o)];
        const cd steady = response_at(taps, a, tw1, n1);
        auto basis = [&](int t) { return scale1 * tw1[wrap(a * (t - ncp1), n1)]; };

        for (int m = 0; m < pair.q; ++m) {
            const int start = m * l2 + ncp2;
            for (int i = 0; i < n2; ++i) {
                const int t = start + i;
                cd v{};
                if (t >= nch) {
                    v = steady * basis(t);
                } else {
                    for (int l = 0; l <= t; ++l) {
                        v += taps(l) * basis(t - l);
                    }
                }
                window[static_cast<std::size_t>(i)] = v;
            }
            fft.execute(window, spec);
            for (int r = 0; r < u2.n_act(); ++r) {
                column(r) = scale2 * spec[static_cast<std::size_t>(u2.active_set[static_cast<std::size_t>(r)])];
            }
            sink(m, o, column);
        }
    }
}

} // namespace

IniMatrix ini_ordering1(const ChannelMatrix& h2, const NumerologyPair& pair, IniFault fault) {
    check_frame(h2, pair);
    check_cp(h2, pair.user1.n_cp, "user 1");
    IniMatrix out;
    out.ordering = Ordering::User1First;
    out.gamma_mat.resize(pair.user1.n_act(), static_cast<Eigen::Index>(pair.q) * pair.user2.n_act());
    ordering1_columns(h2, pair, fault, [&](int col, const CVector& v) { out.gamma_mat.col(col) = v; });
    return out;
}

std::vector<IniMatrix> ini_ordering2_all(const ChannelMatrix& h1, const NumerologyPair& pair) {
    check_frame(h1, pair);
    check_cp(h1, pair.user2.n_cp, "user 2");
    std::vector<IniMatrix> out(static_cast<std::size_t>(pair.q));
    for (int m = 0; m < pair.q; ++m) {
        auto& g = out[static_cast<std::size_t>(m)];
        g.ordering = Ordering::User2First;
        g.m = m + 1;
        g.gamma_mat.resize(pair.user2.n_act(), pair.user1.n_act());
    }
    ordering2_columns(h1, pair, [&](int m, int o, const CVector& v) {
        out[static_cast<std::size_t>(m)].gamma_mat.col(o) = v;
    });
    return out;
}

IniMatrix ini_ordering2(const ChannelMatrix& h1, const NumerologyPair& pair, int m) {
    if (m < 1 || m > pair.q) {
        throw InvalidArgument("symbol index m = " + std::to_string(m) + " outside [1, " + std::to_string(pair.q) + "]");
    }
    auto all = ini_ordering2_all(h1, pair);
    return std::move(all[static_cast<std::size_t>(m - 1)]);
}

MseVector mse_vector(const IniMatrix& g) {
    return MseVector{g.gamma_mat.rowwise().squaredNorm()};
}

MseVector mse_ordering1(const ChannelMatrix& h2, const NumerologyPair& pair, IniFault fault) {
    check_frame(h2, pair);
    check_cp(h2, pair.user1.n_cp, "user 1");
    MseVector out{RVector::Zero(pair.user1.n_act())};
    ordering1_columns(h2, pair, fault, [&](int, const CVector& v) { out.gamma += v.cwiseAbs2(); });
    return out;
}

std::vector<MseVector> mse_ordering2(const ChannelMatrix& h1, const NumerologyPair& pair) {
    check_frame(h1, pair);
    check_cp(h1, pair.user2.n_cp, "user 2");
    std::vector<MseVector> out(static_cast<std::size_t>(pair.q), MseVector{RVector::Zero(pair.user2.n_act())});
    ordering2_columns(h1, pair, [&](int m, int, const CVector& v) {
        out[static_cast<std::size_t>(m)].gamma += v.cwiseAbs2();
    });
    return out;
}

MseVector frame_mse(const std::vector<MseVector>& per_symbol) {
    if (per_symbol.empty()) {
        throw InvalidArgument("frame MSE needs at least one symbol");
    }
    RVector acc = per_symbol.front().gamma;
    for (std::size_t m = 1; m < per_symbol.size(); ++m) {
        if (per_symbol[m].gamma.size() != acc.size()) {
            throw DimensionMismatch("per-symbol MSE vectors differ in length");
        }
        acc += per_symbol[m].gamma;
    }
    return MseVector{acc / static_cast<double>(per_symbol.size())};
}

} // namespace mnnoma
