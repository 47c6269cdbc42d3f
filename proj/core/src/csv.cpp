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

#include "mnnoma/csv.hpp"

#include <array>
#include <charconv>
#include <sstream>

#include "mnnoma/types.hpp"

namespace mnnoma {

std::string format_double(double v) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

CsvWriter::CsvWriter(const std::filesystem::path& path, std::initializer_list<std::string_view> header)
    : out_(path, std::ios::binary | std::ios::trunc) {
    if (!out_) {
        throw Error("cannot write " + path.string());
    }
    for (auto h : header) {
        field(h);
    }
    end_row();
}

CsvWriter& CsvWriter::field(std::string_view s) {
    if (row_started_) {
        out_ << ',';
    }
    out_ << s;
    row_started_ = true;
    return *this;
}

CsvWriter& CsvWriter::field(double v) {
    return field(std::string_view(format_double(v)));
}

CsvWriter& CsvWriter::field(long long v) {
    return field(std::string_view(std::to_string(v)));
}

void CsvWriter::end_row() {
    out_ << '\n';
    row_started_ = false;
}

std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot read " + path.string());
    }
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, ',')) {
            fields.push_back(f);
        }
        if (!line.empty() && line.back() == ',') {
            fields.emplace_back();
        }
        rows.push_back(std::move(fields));
    }
    return rows;
}

} // namespace mnnoma
