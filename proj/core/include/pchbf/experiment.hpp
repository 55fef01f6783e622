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

#include "pchbf/config.hpp"
#include "pchbf/link_simulator.hpp"
#include "pchbf/sector_table.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace pchbf
{

std::string_view software_version() noexcept;

struct ExperimentResult
{
    std::optional<SweepReport> report; // empty when the config disables the Monte Carlo sweep
    ComplexityReport complexity;
    std::vector<std::filesystem::path> files;
};

// Runs the configured sweep and writes, under config.output_dir:
//   sweep.csv      (when config.monte_carlo is set)
//   manifest.json  config echo, seed, per-algorithm wall time, version
// Throws Error{io_error} naming the path on any write failure.
ExperimentResult run_experiment(const ScenarioConfig &config);

// Sectorization of one channel drop (drop 0 of drop_seed) with
// config.export_algorithm.
SectorTable export_sector_table(const ScenarioConfig &config, std::uint64_t drop_seed);

// Writes sectors.json and phases_sector_<s>.csv under config.output_dir.
std::vector<std::filesystem::path> write_sector_export(const ScenarioConfig &config, std::uint64_t drop_seed);

std::string manifest_json(const ScenarioConfig &config, const ComplexityReport &complexity,
                          const SweepReport *report);

// Writes text to path (creating parent directories), throwing Error{io_error}.
void write_text_file(const std::filesystem::path &path, const std::string &text);

} // namespace pchbf
