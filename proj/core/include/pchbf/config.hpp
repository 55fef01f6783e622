// SPDX-License-Identifier: Apache-2.0
//
// pchbf: partially-connected hybrid beamforming link-level simulator
// Copyright (C) 2026 The pchbf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#pragma once

#include "pchbf/link_simulator.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace pchbf
{

// Everything needed to reproduce one experiment. Stored on disk as a flat JSON
// object whose keys are the field names below; lists are JSON arrays.
struct ScenarioConfig
{
    std::string preset = "desk";

    // panel
    std::string layout = "ula"; // "ula" or "upa"
    Index n_rx = 64;
    Index n_subarrays = 8;
    Index rows = 1; // upa only; rows * cols == n_rx
    Index cols = 64;
    double spacing_h = 0.5; // wavelengths
    double spacing_v = 0.5;

    // users
    Index n_users = 12;
    std::vector<double> group_centers_deg{-40.0, 0.0, 45.0};
    double group_spread_deg = 4.0;
    double elevation_deg = 0.0;
    Index n_scatter_paths = 4;
    double rician_k_db = 10.0;
    double angular_spread_deg = 10.0;

    // receiver
    Index k = 3;
    Index n_beam = 4;
    std::vector<std::string> algorithms{"fully-digital", "hc-pc", "hc-pc-mc", "hc-full", "maxpower-1", "maxpower-k"};
    std::string mode = "orthogonal";
    std::string selector = "fft";
    std::string fa_scaling = "normalized";

    // sweep
    std::vector<double> snr_db{-5.0, 0.0, 5.0, 10.0, 15.0, 20.0, 25.0};
    Index n_trials = 2000; // channel drops
    Index noise_seeds = 1; // noise realizations per drop
    Index symbols_per_trial = 48;
    std::uint64_t master_seed = 20240601;
    Index workers = 0; // 0: one per hardware thread
    bool monte_carlo = true;

    // outputs
    std::string export_algorithm = "hc-pc";
    std::string output_dir = "out";

    Index subarray_size() const noexcept { return n_subarrays > 0 ? n_rx / n_subarrays : 0; }

    bool operator==(const ScenarioConfig &) const = default;
};

ScenarioConfig desk_preset();
ScenarioConfig paper_preset();
ScenarioConfig preset_by_name(std::string_view name);

// Throws Error{invariant_violation} naming the offending field and rule.
void validate_config(const ScenarioConfig &config);

// Applies the keys of a flat JSON object on top of base and validates the
// result. A "preset" key, if present, replaces base with that preset first.
ScenarioConfig parse_config_text(std::string_view text, const ScenarioConfig &base = desk_preset());
ScenarioConfig load_config(const std::filesystem::path &path, const ScenarioConfig &base = desk_preset());

std::string serialize_config(const ScenarioConfig &config);

ArrayGeometry make_geometry(const ScenarioConfig &config);
Scenario make_scenario(const ScenarioConfig &config);
SweepSettings make_sweep_settings(const ScenarioConfig &config);

struct ComplexityReport
{
    Index adc_count = 0;          // one ADC per subarray
    Index digital_dim = 0;        // beamspace dimension after selection
    Index subarray_size = 0;      // phase shifters per subarray
    double complexity_ratio = 0.; // (n_rx / reference_antennas)^2
};

inline constexpr Index reference_antennas = 8;

ComplexityReport complexity_report(const ScenarioConfig &config);

} // namespace pchbf
