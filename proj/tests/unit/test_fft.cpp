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

#include <random>

#include <gtest/gtest.h>

#include "mnnoma/fft.hpp"
#include "oracles/dense_oracles.hpp"
#include "test_support.hpp"

using namespace mnnoma;

TEST(Fft, MatchesUnitaryDftUpToScale) {
    std::mt19937_64 rng(7);
    for (int n : {8, 128, 256}) {
        const CVector x = testing_support::random_symbols(rng, n);
        CVector y(n);
        const auto un = static_cast<std::size_t>(n);
        Fft(n, FftDirection::Forward).execute({x.data(), un}, {y.data(), un});
        const CVector want = oracle::dft(n) * x * std::sqrt(static_cast<double>(n));
        EXPECT_LT((y - want).cwiseAbs().maxCoeff(), 1e-10) << n;

        CVector back(n);
        Fft(n, FftDirection::Backward).execute({y.data(), un}, {back.data(), un});
        EXPECT_LT((back / n - x).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Fft, TransformColumnsAndRows) {
    std::mt19937_64 rng(8);
    const int n = 64;
    CMatrix m(n, n);
    for (int c = 0; c < n; ++c) {
        m.col(c) = testing_support::random_symbols(rng, n);
    }
    const CMatrix f = oracle::dft(n);
    CMatrix cols = m;
    transform_columns(cols, FftDirection::Forward);
    EXPECT_LT(testing_support::max_abs_diff(cols, f * m * std::sqrt(double(n))), 1e-9);
    CMatrix rows = m;
    transform_rows(rows, FftDirection::Backward);
    EXPECT_LT(testing_support::max_abs_diff(rows, m * f.adjoint() * std::sqrt(double(n))), 1e-9);
}

TEST(Fft, RejectsMismatchedSpans) {
    const Fft fft(16, FftDirection::Forward);
    std::vector<cd> in(16), out(8);
    EXPECT_THROW(fft.execute(in, out), DimensionMismatch);
}
