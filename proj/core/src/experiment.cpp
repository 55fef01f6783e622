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
#include "pchbf/experiment.hpp"

#include "format_util.hpp"
#include "pchbf/error.hpp"

#include <json.hpp>

#include <fstream>
#include <system_error>

#ifndef PCHBF_VERSION
#define PCHBF_VERSION "0.0.0"
#endif

namespace pchbf
{

using nlohmann::json;

std::string_view software_version() noexcept
{
    return PCHBF_VERSION;
}

void write_text_file(const std::filesystem::path &path, const std::string &text)
{
    std::error_code ec;
    if (path.has_parent_path())
    {
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec)
            throw Error(ErrorKind::io_error,
                        fmt::format("cannot create directory '{}': {}", path.parent_path().string(), ec.message()));
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(ErrorKind::io_error, fmt::format("cannot open '{}' for writing", path.string()));
    out << text;
    out.flush();
    if (!out)
        throw Error(ErrorKind::io_error, fmt::format("write to '{}' failed", path.string()));
}

std::string manifest_json(const ScenarioConfig &config, const ComplexityReport &complexity,
                          const SweepReport *report)
{
    json doc;
    doc["software"] = "pchbf";
    doc["version"] = std::string(software_version());
    doc["config"] = json::parse(serialize_config(config));
    doc["master_seed"] = config.master_seed;
    doc["complexity"] = {{"adc_count", complexity.adc_count},
                         {"digital_dim", complexity.digital_dim},
                         {"subarray_size", complexity.subarray_size},
                         {"complexity_ratio", detail::round_sig12(complexity.complexity_ratio)}};
    if (report != nullptr)
    {
        doc["trials"] = report->n_trials;
        json timing = json::object();
        for (std::size_t a = 0; a < config.algorithms.size() && a < report->algorithm_seconds.size(); ++a)
            timing[config.algorithms[a]] = detail::round_sig12(report->algorithm_seconds[a]);
        doc["algorithm_wall_seconds"] = timing;
        doc["outputs"] = {"sweep.csv"};
    }
    else
    {
        doc["trials"] = 0;
        doc["outputs"] = json::array();
    }
    return doc.dump(2) + "\n";
}

ExperimentResult run_experiment(const ScenarioConfig &config)
{
    validate_config(config);
    ExperimentResult result;
    result.complexity = complexity_report(config);
    const std::filesystem::path dir(config.output_dir);

    if (config.monte_carlo)
    {
        result.report = monte_carlo(make_scenario(config), make_sweep_settings(config));
        const auto csv = dir / "sweep.csv";
        write_text_file(csv, sweep_csv(*result.report));
        result.files.push_back(csv);
    }

    const auto manifest = dir / "manifest.json";
    write_text_file(manifest, manifest_json(config, result.complexity, result.report ? &*result.report : nullptr));
    result.files.push_back(manifest);
    return result;
}

SectorTable export_sector_table(const ScenarioConfig &config, std::uint64_t drop_seed)
{
    const Scenario scenario = make_scenario(config);
    Rng rng = child_rng(drop_seed, {0, 0});
    const ChannelMatrix h = generate_drop(scenario.geometry, scenario.drop, rng);
    const SectorPlan plan = build_sector_plan(h, algorithm_from_string(config.export_algorithm), scenario.k,
                                              scenario.n_beam, scenario.options);
    return sector_table_from_plan(plan, scenario.geometry);
}

std::vector<std::filesystem::path> write_sector_export(const ScenarioConfig &config, std::uint64_t drop_seed)
{
    const SectorTable table = export_sector_table(config, drop_seed);
    const ArrayGeometry geometry = make_geometry(config);
    const std::filesystem::path dir(config.output_dir);

    std::vector<std::filesystem::path> files;
    const auto json_path = dir / "sectors.json";
    write_text_file(json_path, sector_table_json(table));
    files.push_back(json_path);
    for (std::size_t s = 0; s < table.phases.size(); ++s)
    {
        const auto csv = dir / fmt::format("phases_sector_{}.csv", s);
        write_text_file(csv, phase_table_csv(AnalogBeamformer(table.phases[s], geometry)));
        files.push_back(csv);
    }
    return files;
}

} // namespace pchbf
