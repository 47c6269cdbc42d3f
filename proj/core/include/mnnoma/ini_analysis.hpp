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

#ifndef MNNOMA_INI_ANALYSIS_HPP
#define MNNOMA_INI_ANALYSIS_HPP

#include <vector>

#include "mnnoma/channel.hpp"
#include "mnnoma/numerology.hpp"
#include "mnnoma/types.hpp"

namespace mnnoma {

/// Which user the SIC receiver decodes first. The first-decoded user bears the INI.
enum class Ordering : int {
    User1First = 1,
    User2First = 2,
};

/**
 * Inter-numerology interference weights.
 *
 * User1First: N_act1 x q N_act2, column (m - 1) N_act2 + o is subcarrier o of user-2
 * symbol m. User2First: N_act2 x N_act1 for short symbol m.
 */
struct IniMatrix {
    CMatrix gamma_mat;
    Ordering ordering = Ordering::User1First;
    int m = 0; ///< 1..q for User2First, 0 otherwise
};

/// Per-subcarrier interference power on the victim's active set (row squared norms of Gamma).
struct MseVector {
    RVector gamma;
};

/// Fault hooks for mutation testing of the validation suite.
enum class IniFault {
    None,
    SliceOffByOne, ///< user-2 symbol m >= 2 is placed in slot m - 1 of the frame
};

/**
 * Gamma^(1<-2) = F1 Rcp1 H2 (I_q kron Acp2 F2^H).
 *
 * h2 must be built at the frame length L1 and fit inside user 1's CP.
 */
[[nodiscard]] IniMatrix ini_ordering1(const ChannelMatrix& h2, const NumerologyPair& pair,
                                      IniFault fault = IniFault::None);

/// Gamma_m^(2<-1) = F2 Rcp2 C_m H1 Acp1 F1^H for 1 <= m <= q; h1 must fit inside user 2's CP.
[[nodiscard]] IniMatrix ini_ordering2(const ChannelMatrix& h1, const NumerologyPair& pair, int m);

/// All q matrices of ini_ordering2 in one pass.
[[nodiscard]] std::vector<IniMatrix> ini_ordering2_all(const ChannelMatrix& h1, const NumerologyPair& pair);

[[nodiscard]] MseVector mse_vector(const IniMatrix& g);

/// mse_vector(ini_ordering1(...)) without materializing Gamma.
[[nodiscard]] MseVector mse_ordering1(const ChannelMatrix& h2, const NumerologyPair& pair,
                                      IniFault fault = IniFault::None);

/// Per-m mse_vector(ini_ordering2(..., m)), m = 1..q, without materializing Gamma.
[[nodiscard]] std::vector<MseVector> mse_ordering2(const ChannelMatrix& h1, const NumerologyPair& pair);

/// Mean of the per-symbol MSE vectors over the frame.
[[nodiscard]] MseVector frame_mse(const std::vector<MseVector>& per_symbol);

} // namespace mnnoma

#endif // MNNOMA_INI_ANALYSIS_HPP
