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

#include "oracles/dense_oracles.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

namespace {

using cd = std::complex<double>;
constexpr double kTwoPi = 6.283185307179586476925286766559;

} // namespace

CMatrix dft(int n) {
    CMatrix f(n, n);
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    for (int k = 0; k < n; ++k) {
        for (int c = 0; c < n; ++c) {
            // reduce the exponent first so the angle stays small and exact
            const long long e = (static_cast<long long>(k) * c) % n;
            f(k, c) = s * std::polar(1.0, -kTwoPi * static_cast<double>(e) / n);
        }
    }
    return f;
}

CMatrix cp_insert(int n, int ncp) {
    CMatrix a = CMatrix::Zero(n + ncp, n);
    for (int i = 0; i < ncp; ++i) {
        a(i, n - ncp + i) = 1.0;
    }
    for (int i = 0; i < n; ++i) {
        a(ncp + i, i) = 1.0;
    }
    return a;
}

CMatrix cp_strip(int n, int ncp) {
    CMatrix r = CMatrix::Zero(n, n + ncp);
    for (int i = 0; i < n; ++i) {
        r(i, ncp + i) = 1.0;
    }
    return r;
}

CMatrix toeplitz(const CVector& h, int l) {
    CMatrix t = CMatrix::Zero(l, l);
    for (int r = 0; r < l; ++r) {
        for (int c = 0; c <= r; ++c) {
            if (r - c < h.size()) {
                t(r, c) = h(r - c);
            }
        }
    }
    return t;
}

CMatrix active_rows(const CMatrix& f, const std::vector<int>& active) {
    CMatrix out(static_cast<Eigen::Index>(active.size()), f.cols());
    for (std::size_t i = 0; i < active.size(); ++i) {
        out.row(static_cast<Eigen::Index>(i)) = f.row(active[i]);
    }
    return out;
}

CVector cfr(const CVector& h, int n) {
    // exp(-j 2 pi k l / n) depends only on k l mod n
    std::vector<cd> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        w[static_cast<std::size_t>(i)] = std::exp(cd(0.0, -kTwoPi * static_cast<double>(i) / n));
    }
    CVector psi(n);
    for (int k = 0; k < n; ++k) {
        cd acc{};
        for (Eigen::Index l = 0; l < h.size(); ++l) {
            const auto idx = (static_cast<std::int64_t>(k) * l) % n;
            acc += h(l) * w[static_cast<std::size_t>(idx)];
        }
        psi(k) = acc;
    }
    return psi;
}

CVector modulate(const CVector& d, const mnnoma::Numerology& num) {
    const int n = num.n_fft;
    const int ncp = num.n_cp;
    CVector x(n + ncp);
    for (int t = 0; t < n + ncp; ++t) {
        const int c = (t - ncp + n) % n;
        cd acc{};
        for (std::size_t i = 0; i < num.active_set.size(); ++i) {
            const int k = num.active_set[i];
            acc += d(static_cast<Eigen::Index>(i)) * std::exp(cd(0.0, kTwoPi * k * c / n));
        }
        x(t) = acc / std::sqrt(static_cast<double>(n));
    }
    return x;
}

CVector convolve(const CVector& h, const CVector& x) {
    CVector y = CVector::Zero(x.size());
    for (Eigen::Index t = 0; t < x.size(); ++t) {
        for (Eigen::Index l = 0; l < h.size() && l <= t; ++l) {
            y(t) += h(l) * x(t - l);
        }
    }
    return y;
}

CMatrix gamma_ordering1(const CVector& h2, const mnnoma::NumerologyPair& pair) {
    const auto& u1 = pair.user1;
    const auto& u2 = pair.user2;
    const int l1 = u1.symbol_length();
    const int l2 = u2.symbol_length();
    const CMatrix rx = active_rows(dft(u1.n_fft), u1.active_set) * cp_strip(u1.n_fft, u1.n_cp);
    const CMatrix tx1 = cp_insert(u2.n_fft, u2.n_cp) * active_rows(dft(u2.n_fft), u2.active_set).adjoint();
    CMatrix tx = CMatrix::Zero(l1, pair.q * u2.n_act());
    for (int m = 0; m < pair.q; ++m) {
        tx.block(m * l2, m * u2.n_act(), l2, u2.n_act()) = tx1;
    }
    return rx * toeplitz(h2, l1) * tx;
}

CMatrix gamma_ordering2(const CVector& h1, const mnnoma::NumerologyPair& pair, int m) {
    const auto& u1 = pair.user1;
    const auto& u2 = pair.user2;
    const int l1 = u1.symbol_length();
    const int l2 = u2.symbol_length();
    CMatrix slice = CMatrix::Zero(l2, l1);
    for (int i = 0; i < l2; ++i) {
        slice(i, (m - 1) * l2 + i) = 1.0;
    }
    const CMatrix rx = active_rows(dft(u2.n_fft), u2.active_set) * cp_strip(u2.n_fft, u2.n_cp) * slice;
    const CMatrix tx = cp_insert(u1.n_fft, u1.n_cp) * active_rows(dft(u1.n_fft), u1.active_set).adjoint();
    return rx * toeplitz(h1, l1) * tx;
}

RVector row_norms(const CMatrix& g) {
    RVector out(g.rows());
    for (Eigen::Index r = 0; r < g.rows(); ++r) {
        double acc = 0.0;
        for (Eigen::Index c = 0; c < g.cols(); ++c) {
            acc += std::norm(g(r, c));
        }
        out(r) = acc;
    }
    return out;
}

double rate_interfered(double bandwidth, int n_fft, double p_own, double p_other, const RVector& gain,
                       const RVector& mse, double n0) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < gain.size(); ++i) {
        acc += std::log2(1.0 + p_own * gain(i) / (p_other * mse(i) + n0));
    }
    return bandwidth / n_fft * acc;
}

double rate_clean(double bandwidth, int n_fft, double p, const RVector& gain, double n0) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < gain.size(); ++i) {
        acc += std::log2(1.0 + p * gain(i) / n0);
    }
    return bandwidth / n_fft * acc;
}

} // namespace oracle
