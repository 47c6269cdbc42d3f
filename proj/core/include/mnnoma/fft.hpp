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

#ifndef MNNOMA_FFT_HPP
#define MNNOMA_FFT_HPP

#include <span>

#include "mnnoma/types.hpp"

namespace mnnoma {

/// Forward uses exp(-j 2 pi n k / N), backward exp(+j 2 pi n k / N). Neither is scaled.
enum class FftDirection { Forward, Backward };

/**
 * Fixed-size complex DFT backed by FFTW.
 *
 * Plans are created once per (size, direction) and shared process-wide. execute()
 * may be called concurrently from any number of threads.
 */
class Fft {
public:
    Fft(int n, FftDirection dir);

    [[nodiscard]] int size() const noexcept { return n_; }
    [[nodiscard]] FftDirection direction() const noexcept { return dir_; }

    void execute(std::span<const cd> in, std::span<cd> out) const;

private:
    int n_;
    FftDirection dir_;
    void* plan_; // fftw_plan, owned by the process-wide cache
};

/// Estimate plans instantly; Measure spends a one-off planning cost per shape for faster repeats.
enum class FftPlanning { Estimate, Measure };

/// Applies the unscaled transform to every column of m in place.
void transform_columns(CMatrix& m, FftDirection dir, FftPlanning planning = FftPlanning::Estimate);

/// Applies the unscaled transform to every row of m in place.
void transform_rows(CMatrix& m, FftDirection dir, FftPlanning planning = FftPlanning::Estimate);

} // namespace mnnoma

#endif // MNNOMA_FFT_HPP
