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

#ifndef MNNOMA_CSV_HPP
#define MNNOMA_CSV_HPP

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace mnnoma {

/// Shortest decimal text that round-trips to the same double.
[[nodiscard]] std::string format_double(double v);

/// Minimal comma-separated writer. Fields are written verbatim; callers keep them free of commas.
class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, std::initializer_list<std::string_view> header);

    CsvWriter& field(std::string_view s);
    CsvWriter& field(double v);
    CsvWriter& field(long long v);
    CsvWriter& field(int v) { return field(static_cast<long long>(v)); }
    void end_row();

private:
    std::ofstream out_;
    bool row_started_ = false;
};

/// Parses a CSV file written by CsvWriter into rows of fields (header included).
[[nodiscard]] std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path);

} // namespace mnnoma

#endif // MNNOMA_CSV_HPP
