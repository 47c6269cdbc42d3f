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

#include "mnnoma/ofdm_ops.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace mnnoma {

OfdmOperatorSet build_operators(const Numerology& num) {
    num.validate();
    const int n = num.n_fft;
    const int ncp = num.n_cp;
    const int l = num.symbol_length();
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));

    OfdmOperatorSet ops;
    ops.num = num;
    ops.fmat.resize(num.n_act(), n);
    for (int r = 0; r < num.n_act(); ++r) {
        const long long k = num.active_set[static_cast<std::size_t>(r)];
        for (int c = 0; c < n; ++c) {
            // reduce the phase index modulo N so large products stay exact
            const double phase = -2.0 * kPi * static_cast<double>((k * c) % n) / n;
            ops.fmat(r, c) = std::polar(scale, phase);
        }
    }

    ops.cp_add = RMatrix::Zero(l, n);
    for (int t = 0; t < ncp; ++t) {
        ops.cp_add(t, n - ncp + t) = 1.0;
    }
    ops.cp_add.bottomRows(n).setIdentity();

    ops.cp_remove = RMatrix::Zero(n, l);
    ops.cp_remove.rightCols(n).setIdentity();
    return ops;
}

CVector modulate_symbol(const CVector& d, const OfdmOperatorSet& ops) {
    if (d.size() != ops.num.n_act()) {
        throw DimensionMismatch("symbol vector has " + std::to_string(d.size()) + " entries, expected " +
                                std::to_string(ops.num.n_act()));
    }
    return ops.cp_add.cast<cd>() * (ops.fmat.adjoint() * d);
}

CVector build_frame_user2(const CVector& d2_tilde, const OfdmOperatorSet& ops2, int q) {
    const int nact = ops2.num.n_act();
    const int l2 = ops2.num.symbol_length();
    if (q < 1 || d2_tilde.size() != static_cast<Eigen::Index>(q) * nact) {
        throw DimensionMismatch("concatenated user-2 data must hold q * n_act symbols");
    }
    CVector frame(static_cast<Eigen::Index>(q) * l2);
    for (int m = 0; m < q; ++m) {
        frame.segment(static_cast<Eigen::Index>(m) * l2, l2) =
            modulate_symbol(d2_tilde.segment(static_cast<Eigen::Index>(m) * nact, nact), ops2);
    }
    return frame;
}

RMatrix slice_matrix(int m, int q, int l2) {
    if (q < 1 || m < 1 || m > q) {
        throw InvalidArgument("slice index m = " + std::to_string(m) + " outside [1, " + std::to_string(q) + "]");
    }
    if (l2 <= 0) {
        throw InvalidArgument("symbol length must be positive");
    }
    RMatrix c = RMatrix::Zero(l2, static_cast<Eigen::Index>(q) * l2);
    c.middleCols(static_cast<Eigen::Index>(m - 1) * l2, l2).setIdentity();
    return c;
}

OfdmModem::OfdmModem(Numerology num)
    : num_((num.validate(), std::move(num))),
      ifft_(num_.n_fft, FftDirection::Backward),
      fft_(num_.n_fft, FftDirection::Forward),
      scale_(1.0 / std::sqrt(static_cast<double>(num_.n_fft))) {}

CVector OfdmModem::modulate(const CVector& d) const {
    if (d.size() != num_.n_act()) {
        throw DimensionMismatch("symbol vector has " + std::to_string(d.size()) + " entries, expected " +
                                std::to_string(num_.n_act()));
    }
    const int n = num_.n_fft;
    const int ncp = num_.n_cp;
    std::vector<cd> grid(static_cast<std::size_t>(n), cd{});
    for (int i = 0; i < num_.n_act(); ++i) {
        grid[static_cast<std::size_t>(num_.active_set[static_cast<std::size_t>(i)])] = d(i);
    }
    std::vector<cd> time(static_cast<std::size_t>(n));
    ifft_.execute(grid, time);

    CVector x(num_.symbol_length());
    for (int t = 0; t < ncp; ++t) {
        x(t) = scale_ * time[static_cast<std::size_t>(n - ncp + t)];
    }
    for (int t = 0; t < n; ++t) {
        x(ncp + t) = scale_ * time[static_cast<std::size_t>(t)];
    }
    return x;
}

CVector OfdmModem::modulate_frame(const CVector& d_tilde, int q) const {
    const int nact = num_.n_act();
    const int l = num_.symbol_length();
    if (q < 1 || d_tilde.size() != static_cast<Eigen::Index>(q) * nact) {
        throw DimensionMismatch("concatenated data must hold q * n_act symbols");
    }
    CVector frame(static_cast<Eigen::Index>(q) * l);
    for (int m = 0; m < q; ++m) {
        frame.segment(static_cast<Eigen::Index>(m) * l, l) =
            modulate(d_tilde.segment(static_cast<Eigen::Index>(m) * nact, nact));
    }
    return frame;
}

CVector OfdmModem::demodulate(std::span<const cd> symbol) const {
    if (static_cast<int>(symbol.size()) != num_.symbol_length()) {
        throw DimensionMismatch("received symbol has " + std::to_string(symbol.size()) +
                                " samples, expected " + std::to_string(num_.symbol_length()));
    }
    const int n = num_.n_fft;
    std::vector<cd> spec(static_cast<std::size_t>(n));
    fft_.execute(symbol.subspan(static_cast<std::size_t>(num_.n_cp)), spec);
    CVector y(num_.n_act());
    for (int i = 0; i < num_.n_act(); ++i) {
        y(i) = scale_ * spec[static_cast<std::size_t>(num_.active_set[static_cast<std::size_t>(i)])];
    }
    return y;
}

} // namespace mnnoma
