// Copyright 2026 The ptele Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace ptele::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Parses "v1,v2,..." or an inclusive range "start:stop:step".
std::vector<double> parse_value_list(std::string_view text);

struct SweepGrid {
    std::vector<double> e0_values;
    std::vector<double> phi_values;

    /// e0 in {0, 0.1, ..., 1}, phi in {-1, -0.75, ..., 1}.
    static SweepGrid defaults();
    /// Throws InvalidInput on empty axes or out-of-range values.
    void validate() const;
};

struct SweepRow {
    double e0;
    double phi;
    double ew;
    double fidelity_closed;
    double fidelity_sim;
    double ent_final_closed;
    double ent_final_sim;
    double info_total;
    double info_i1;
    double info_i4;
    double info_ic;
    /// Simulation against the closed forms evaluated with phi itself.
    double max_abs_discrepancy;
    /// Simulation against the max(0, phi) closed forms; nonzero only for phi < 0.
    double ew_form_gap;
};

inline constexpr double kSweepTol = 1e-8;

SweepRow evaluate_grid_point(double e0, double phi);
/// Rows ordered e0-major, then phi.
std::vector<SweepRow> evaluate_sweep(const SweepGrid& grid);

std::string format_double(double value);
std::string sweep_csv(const std::vector<SweepRow>& rows);
nlohmann::json sweep_json(const std::vector<SweepRow>& rows);

enum class OutputFormat { csv, json };

int cmd_sweep(const SweepGrid& grid, const std::filesystem::path& out, OutputFormat format);

/// Verification report without the timestamp; deterministic in (trials, seed).
nlohmann::json verify_report(int trials, std::uint64_t seed);
int cmd_verify(int trials, std::uint64_t seed, const std::filesystem::path& out);

std::string curve_csv(std::size_t points);
int cmd_curve(std::size_t points, const std::filesystem::path& out);

int run(int argc, char** argv);

}  // namespace ptele::cli
