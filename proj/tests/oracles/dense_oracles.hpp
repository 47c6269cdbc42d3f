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

#ifndef MNNOMA_TESTS_DENSE_ORACLES_HPP
#define MNNOMA_TESTS_DENSE_ORACLES_HPP

// Reference implementations written straight from the matrix definitions. They share
// no code with the library beyond the Numerology data type and are only fast enough
// for the small numerologies.

#include <vector>

#include "mnnoma/numerology.hpp"
#include "mnnoma/types.hpp"

namespace oracle {

using mnnoma::CMatrix;
using mnnoma::CVector;
using mnnoma::RVector;

/// Unitary N-point DFT, rows k = 0..N-1.
CMatrix dft(int n);
/// L x N cyclic-prefix insertion.
CMatrix cp_insert(int n, int ncp);
/// N x L cyclic-prefix removal [0 | I].
CMatrix cp_strip(int n, int ncp);
/// L x L lower-triangular Toeplitz convolution matrix.
CMatrix toeplitz(const CVector& h, int l);
/// Rows of the DFT on the active set.
CMatrix active_rows(const CMatrix& f, const std::vector<int>& active);

/// sum_l h_l e^{-j 2 pi k l / N} with std::exp per term.
CVector cfr(const CVector& h, int n);

/// Time samples of one CP-OFDM symbol computed sample by sample from the IDFT sum.
CVector modulate(const CVector& d, const mnnoma::Numerology& num);
/// y_t = sum_l h_l x_{t-l}, truncated to the length of x.
CVector convolve(const CVector& h, const CVector& x);

/// F1 Rcp1 H2 (I_q kron Acp2 F2^H), active rows and columns.
CMatrix gamma_ordering1(const CVector& h2, const mnnoma::NumerologyPair& pair);
/// F2 Rcp2 C_m H1 Acp1 F1^H, active rows and columns, m = 1..q.
CMatrix gamma_ordering2(const CVector& h1, const mnnoma::NumerologyPair& pair, int m);
/// Squared Euclidean norm of every row.
RVector row_norms(const CMatrix& g);

/// (B/N) sum log2(1 + p_own g / (p_other mse + n0)), summed one tone at a time.
double rate_interfered(double bandwidth, int n_fft, double p_own, double p_other, const RVector& gain,
                       const RVector& mse, double n0);
/// (B/N) sum log2(1 + p g / n0).
double rate_clean(double bandwidth, int n_fft, double p, const RVector& gain, double n0);

} // namespace oracle

#endif // MNNOMA_TESTS_DENSE_ORACLES_HPP
