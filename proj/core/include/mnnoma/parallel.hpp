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

#ifndef MNNOMA_PARALLEL_HPP
#define MNNOMA_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace mnnoma {

/// 0 means one worker per hardware thread.
[[nodiscard]] int resolve_threads(int requested) noexcept;

/**
 * Calls fn(i) for every i in [0, count) on up to `threads` workers. Indices are
 * handed out dynamically; callers own determinism by writing to slot i only.
 * The first exception thrown by any worker is rethrown after all workers join.
 */
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

} // namespace mnnoma

#endif // MNNOMA_PARALLEL_HPP
