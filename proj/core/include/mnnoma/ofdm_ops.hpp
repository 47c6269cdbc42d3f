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

#ifndef MNNOMA_OFDM_OPS_HPP
#define MNNOMA_OFDM_OPS_HPP

#include <span>

#include "mnnoma/fft.hpp"
#include "mnnoma/numerology.hpp"
#include "mnnoma/types.hpp"

namespace mnnoma {

/**
 * Explicit transmit/receive matrices of one numerology.
 *
 * fmat holds the active rows of the unitary N-point DFT, cp_add (L x N) prepends the
 * last n_cp samples and cp_remove (N x L) = [0 | I_N] discards them again. Memory is
 * O(N^2); use OfdmModem when only the action of these matrices is needed.
 */
struct OfdmOperatorSet {
    Numerology num;
    CMatrix fmat;
    RMatrix cp_add;
    RMatrix cp_remove;
};

[[nodiscard]] OfdmOperatorSet build_operators(const Numerology& num);

/// A_cp F^H d via the dense matrices.
[[nodiscard]] CVector modulate_symbol(const CVector& d, const OfdmOperatorSet& ops);

/// (I_q kron A_cp F^H) d2_tilde via the dense matrices; length q L2.
[[nodiscard]] CVector build_frame_user2(const CVector& d2_tilde, const OfdmOperatorSet& ops2, int q);

/// The L2 x q L2 selector [0 | I_L2 | 0] with (m - 1) L2 leading zero columns, 1 <= m <= q.
[[nodiscard]] RMatrix slice_matrix(int m, int q, int l2);

/// FFT-based CP-OFDM modulator/demodulator; agrees with the dense operators to round-off.
class OfdmModem {
public:
    explicit OfdmModem(Numerology num);

    [[nodiscard]] const Numerology& numerology() const noexcept { return num_; }

    /// A_cp F^H d, length L.
    [[nodiscard]] CVector modulate(const CVector& d) const;

    /// (I_q kron A_cp F^H) d_tilde, length q L.
    [[nodiscard]] CVector modulate_frame(const CVector& d_tilde, int q) const;

    /// F R_cp applied to one received symbol of L samples.
    [[nodiscard]] CVector demodulate(std::span<const cd> symbol) const;

private:
    Numerology num_;
    Fft ifft_;
    Fft fft_;
    double scale_;
};

} // namespace mnnoma

#endif // MNNOMA_OFDM_OPS_HPP
