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

#include "mnnoma/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace mnnoma {

namespace {

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

class PlanCache {
public:
    ~PlanCache() {
        for (auto& [key, plan] : plans_) {
            fftw_destroy_plan(plan);
        }
    }

    fftw_plan get(int n, FftDirection dir) {
        const std::lock_guard lock(planner_mutex());
        const auto key = std::make_pair(n, dir);
        if (auto it = plans_.find(key); it != plans_.end()) {
            return it->second;
        }
        auto* in = fftw_alloc_complex(static_cast<std::size_t>(n));
        auto* out = fftw_alloc_complex(static_cast<std::size_t>(n));
        const int sign = dir == FftDirection::Forward ? FFTW_FORWARD : FFTW_BACKWARD;
        fftw_plan plan = fftw_plan_dft_1d(n, in, out, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(in);
        fftw_free(out);
        if (plan == nullptr) {
            throw Error("FFTW could not create a plan of size " + std::to_string(n));
        }
        plans_.emplace(key, plan);
        return plan;
    }

private:
    std::map<std::pair<int, FftDirection>, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache instance;
    return instance;
}

} // namespace

Fft::Fft(int n, FftDirection dir) : n_(n), dir_(dir) {
    if (n <= 0) {
        throw InvalidArgument("FFT size must be positive");
    }
    plan_ = cache().get(n, dir);
}

void Fft::execute(std::span<const cd> in, std::span<cd> out) const {
    if (static_cast<int>(in.size()) != n_ || static_cast<int>(out.size()) != n_) {
        throw DimensionMismatch("FFT buffer size does not match plan size " + std::to_string(n_));
    }
    // new-array execute is thread-safe; FFTW never writes to the input of an
    // out-of-place complex transform.
    auto* src = reinterpret_cast<fftw_complex*>(const_cast<cd*>(in.data()));
    auto* dst = reinterpret_cast<fftw_complex*>(out.data());
    fftw_execute_dft(static_cast<fftw_plan>(plan_), src, dst);
}

namespace {

struct BatchKey {
    int n;
    int count;
    int stride;
    int dist;
    FftDirection dir;
    FftPlanning planning;

    auto operator<=>(const BatchKey&) const = default;
};

// In-place batched plans; measured plans are timed on scratch memory, never on caller data.
fftw_plan batch_plan(const BatchKey& key) {
    static std::map<BatchKey, fftw_plan> plans;
    const std::lock_guard lock(planner_mutex());
    if (auto it = plans.find(key); it != plans.end()) {
        return it->second;
    }
    const std::size_t extent = static_cast<std::size_t>(key.n - 1) * static_cast<std::size_t>(key.stride) +
                               static_cast<std::size_t>(key.count - 1) * static_cast<std::size_t>(key.dist) + 1;
    auto* scratch = fftw_alloc_complex(extent);
    const int sign = key.dir == FftDirection::Forward ? FFTW_FORWARD : FFTW_BACKWARD;
    const unsigned flags = (key.planning == FftPlanning::Measure ? FFTW_MEASURE : FFTW_ESTIMATE) | FFTW_UNALIGNED;
    int n = key.n;
    fftw_plan plan = fftw_plan_many_dft(1, &n, key.count, scratch, nullptr, key.stride, key.dist, scratch, nullptr,
                                        key.stride, key.dist, sign, flags);
    fftw_free(scratch);
    if (plan == nullptr) {
        throw Error("FFTW could not create a batched plan of size " + std::to_string(key.n));
    }
    plans.emplace(key, plan);
    return plan;
}

// Plans cover at most kChunk transforms and are reused across the batch, so planning
// cost does not grow with the matrix size.
constexpr int kChunk = 64;

void transform_batch(cd* data, BatchKey key) {
    if (key.n == 0 || key.count == 0) {
        return;
    }
    const int total = key.count;
    for (int first = 0; first < total; first += kChunk) {
        key.count = std::min(kChunk, total - first);
        auto* buf = reinterpret_cast<fftw_complex*>(data + static_cast<std::ptrdiff_t>(first) * key.dist);
        fftw_execute_dft(batch_plan(key), buf, buf);
    }
}

} // namespace

void transform_columns(CMatrix& m, FftDirection dir, FftPlanning planning) {
    const int rows = static_cast<int>(m.rows());
    transform_batch(m.data(), BatchKey{rows, static_cast<int>(m.cols()), 1, rows, dir, planning});
}

void transform_rows(CMatrix& m, FftDirection dir, FftPlanning planning) {
    const int rows = static_cast<int>(m.rows());
    transform_batch(m.data(), BatchKey{static_cast<int>(m.cols()), rows, rows, 1, dir, planning});
}

} // namespace mnnoma
