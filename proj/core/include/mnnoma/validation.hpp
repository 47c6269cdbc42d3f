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

#ifndef MNNOMA_VALIDATION_HPP
#define MNNOMA_VALIDATION_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "mnnoma/ini_analysis.hpp"
#include "mnnoma/numerology.hpp"
#include "mnnoma/scenario.hpp"
#include "mnnoma/types.hpp"

namespace mnnoma {

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string comparison; ///< "<=" or ">="
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    [[nodiscard]] bool passed() const;
    [[nodiscard]] std::string to_json() const;
};

struct ValidationOptions {
    IniFault fault = IniFault::None; ///< injected into the closed-form INI under test
    int optimizer_instances = 20;
    int diagonalization_draws = 5;
};

/// F Rcp H Acp F^H over the full N x N grid, built from the dense Toeplitz block and two FFT passes.
[[nodiscard]] CMatrix frequency_domain_channel(const Numerology& num, const CVector& h);

/// Literal dense products for Gamma^(1<-2) and Gamma_m^(2<-1); O(L1^2 N) memory and time.
[[nodiscard]] CMatrix dense_ini_ordering1(const ChannelMatrix& h2, const NumerologyPair& pair);
[[nodiscard]] CMatrix dense_ini_ordering2(const ChannelMatrix& h1, const NumerologyPair& pair, int m);

/// Runs every check on the scenario's numerology pair and channel profiles.
[[nodiscard]] ValidationReport run_validation(const Scenario& s, const ValidationOptions& opts = {});

void write_report(const ValidationReport& report, const std::filesystem::path& path);

} // namespace mnnoma

#endif // MNNOMA_VALIDATION_HPP
