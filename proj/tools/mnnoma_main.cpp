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

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mnnoma/experiment.hpp"
#include "mnnoma/scenario.hpp"
#include "mnnoma/validation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailed = 1;
constexpr int kExitConfigError = 2;

struct CommonFlags {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    std::optional<std::string> out;
    std::optional<int> threads;
};

void add_common(CLI::App* sub, CommonFlags& f) {
    sub->add_option("-c,--config", f.config, "Scenario JSON file")->check(CLI::ExistingFile);
    sub->add_option("--seed", f.seed, "Master seed");
    sub->add_option("--trials", f.trials, "Channel draws per point");
    sub->add_option("-o,--out", f.out, "Output directory");
    sub->add_option("--threads", f.threads, "Worker threads (0 = all cores)");
}

mnnoma::Scenario build_scenario(const CommonFlags& f) {
    mnnoma::Scenario s = f.config.empty() ? mnnoma::Scenario{} : mnnoma::load_scenario(f.config);
    if (f.seed) {
        s.seed = *f.seed;
    }
    if (f.trials) {
        s.trials = *f.trials;
    }
    if (f.out) {
        s.output_dir = *f.out;
    }
    if (f.threads) {
        s.threads = *f.threads;
    }
    s.validate();
    return s;
}

void warn_admissibility(const mnnoma::Scenario& s, const mnnoma::NumerologyPair& pair) {
    if (auto w = mnnoma::admissibility_warning(s, pair)) {
        std::cerr << "warning: " << *w << "\n";
    }
}

void print_summary(const mnnoma::SeResult& res) {
    for (const auto& r : res.summary) {
        std::cout << "snr=" << r.snr_db << " q=" << r.q << " " << mnnoma::scheme_name(r.scheme);
        if (r.ordering > 0) {
            std::cout << " ord" << r.ordering;
        }
        std::cout << " mean_se=" << r.mean_se << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-user uplink multi-numerology NOMA link-level simulator"};
    app.require_subcommand(1);

    CommonFlags mse_flags;
    CommonFlags snr_flags;
    CommonFlags q_flags;
    CommonFlags val_flags;
    std::string fault = "none";

    auto* mse = app.add_subcommand("mse", "Per-subcarrier MSE and CFR traces for one channel draw");
    add_common(mse, mse_flags);
    auto* snr = app.add_subcommand("se-vs-snr", "Spectral efficiency over the SNR grid");
    add_common(snr, snr_flags);
    auto* q = app.add_subcommand("se-vs-q", "Spectral efficiency over the numerology ratio q");
    add_common(q, q_flags);
    auto* val = app.add_subcommand("validate", "Oracle agreement, diagonalization, reduction and optimizer checks");
    add_common(val, val_flags);
    val->add_option("--fault", fault, "Inject an INI fault")
        ->check(CLI::IsMember({"none", "slice-offset"}))
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfigError;
    }

    try {
        if (*mse) {
            const auto s = build_scenario(mse_flags);
            warn_admissibility(s, s.numerology_pair());
            const auto res = mnnoma::run_mse(s);
            std::cout << "wrote mse.csv, mse_per_symbol.csv, mse.svg to " << s.output_dir << " (fs = " << res.fs
                      << " Hz)\n";
        } else if (*snr) {
            const auto s = build_scenario(snr_flags);
            warn_admissibility(s, s.numerology_pair());
            print_summary(mnnoma::run_se_vs_snr(s));
        } else if (*q) {
            const auto s = build_scenario(q_flags);
            print_summary(mnnoma::run_se_vs_q(s));
        } else if (*val) {
            const auto s = build_scenario(val_flags);
            mnnoma::ValidationOptions opts;
            if (fault == "slice-offset") {
                opts.fault = mnnoma::IniFault::SliceOffByOne;
            }
            const auto report = mnnoma::run_validation(s, opts);
            const auto path = std::filesystem::path(s.output_dir) / "validation.json";
            mnnoma::write_report(report, path);
            for (const auto& c : report.checks) {
                std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " measured=" << c.measured << " "
                          << c.comparison << " " << c.tolerance << "\n";
            }
            std::cout << "report: " << path.string() << "\n";
            return report.passed() ? kExitOk : kExitValidationFailed;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
    return kExitOk;
}
