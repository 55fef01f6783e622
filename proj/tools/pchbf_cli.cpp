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
// Command-line front end: runs a configured Monte Carlo sweep, prints the
// complexity arithmetic, or exports the sector table of one drop.

#include "pchbf/config.hpp"
#include "pchbf/error.hpp"
#include "pchbf/experiment.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace
{

std::vector<std::string> split_list(const std::string &text)
{
    std::vector<std::string> out;
    std::string item;
    for (char ch : text)
    {
        if (ch == ',')
        {
            if (!item.empty())
                out.push_back(item);
            item.clear();
        }
        else if (ch != ' ')
            item += ch;
    }
    if (!item.empty())
        out.push_back(item);
    return out;
}

int fail(const char *stage, const std::exception &e)
{
    std::fprintf(stderr, "pchbf: %s failed: %s\n", stage, e.what());
    return 2;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Partially-connected hybrid beamforming link-level simulator"};

    std::optional<std::string> config_path;
    std::string preset = "desk";
    std::optional<std::string> algorithms;
    std::optional<std::string> snr;
    std::optional<long long> trials;
    std::optional<long long> noise_seeds;
    std::optional<unsigned long long> seed;
    std::optional<std::string> mode;
    std::optional<std::string> selector;
    std::optional<std::string> out_dir;
    std::optional<long long> workers;
    bool export_sectors = false;
    bool full = false;
    bool quiet = false;

    app.add_option("--config", config_path, "JSON config file (flat key/value object)");
    app.add_option("--preset", preset, "Base preset")->check(CLI::IsMember({"desk", "paper"}));
    app.add_option("--algorithms", algorithms,
                   "Comma-separated list of hc-pc, hc-full, hc-pc-mc, maxpower-1, maxpower-k, fully-digital");
    app.add_option("--snr", snr, "Comma-separated SNR grid in dB");
    app.add_option("--trials", trials, "Number of channel drops");
    app.add_option("--noise-seeds", noise_seeds, "Noise realizations per drop");
    app.add_option("--seed", seed, "Master seed");
    app.add_option("--mode", mode, "Sector mode")->check(CLI::IsMember({"orthogonal", "split"}));
    app.add_option("--selector", selector, "Beamspace selector")->check(CLI::IsMember({"fft", "svd"}));
    app.add_option("--out", out_dir, "Output directory");
    app.add_option("--workers", workers, "Worker threads (0 = hardware concurrency)");
    app.add_flag("--export-sectors", export_sectors,
                 "Write the sector table and phase tables of one drop instead of sweeping");
    app.add_flag("--full", full, "Run the Monte Carlo sweep even when the preset disables it");
    app.add_flag("-q,--quiet", quiet, "Only print errors");

    CLI11_PARSE(app, argc, argv);

    pchbf::ScenarioConfig config;
    try
    {
        config = pchbf::preset_by_name(preset);
        if (config_path)
            config = pchbf::load_config(*config_path, config);
        if (algorithms)
            config.algorithms = split_list(*algorithms);
        if (snr)
        {
            config.snr_db.clear();
            for (const auto &v : split_list(*snr))
            {
                std::size_t used = 0;
                double x = 0.0;
                try
                {
                    x = std::stod(v, &used);
                }
                catch (const std::exception &)
                {
                    used = 0;
                }
                if (used != v.size())
                    throw pchbf::Error(pchbf::ErrorKind::invariant_violation,
                                       fmt::format("snr_db: '{}' is not a number", v));
                config.snr_db.push_back(x);
            }
        }
        if (trials)
            config.n_trials = *trials;
        if (noise_seeds)
            config.noise_seeds = *noise_seeds;
        if (seed)
            config.master_seed = *seed;
        if (mode)
            config.mode = *mode;
        if (selector)
            config.selector = *selector;
        if (out_dir)
            config.output_dir = *out_dir;
        if (workers)
            config.workers = *workers;
        if (full)
            config.monte_carlo = true;
        pchbf::validate_config(config);
    }
    catch (const std::exception &e)
    {
        return fail("config", e);
    }

    const auto complexity = pchbf::complexity_report(config);
    if (!quiet)
        fmt::print("preset={} n_rx={} subarrays={} L={} adc_count={} digital_dim={} complexity_ratio={:.12g}\n",
                   config.preset, config.n_rx, config.n_subarrays, complexity.subarray_size, complexity.adc_count,
                   complexity.digital_dim, complexity.complexity_ratio);

    if (export_sectors)
    {
        try
        {
            for (const auto &path : pchbf::write_sector_export(config, config.master_seed))
                if (!quiet)
                    fmt::print("wrote {}\n", path.string());
        }
        catch (const std::exception &e)
        {
            return fail("sector export", e);
        }
        return 0;
    }

    pchbf::ExperimentResult result;
    try
    {
        result = pchbf::run_experiment(config);
    }
    catch (const pchbf::Error &e)
    {
        return fail(e.kind() == pchbf::ErrorKind::io_error ? "output" : "sweep", e);
    }
    catch (const std::exception &e)
    {
        return fail("sweep", e);
    }

    if (!quiet)
    {
        if (!result.report)
            fmt::print("Monte Carlo sweep disabled for this preset (pass --full to run it)\n");
        else
            for (const auto &row : result.report->rows)
                fmt::print("{:>14} {:>6.1f} dB  SER {:.4e} +/- {:.2e}  sum-rate {:.4f}\n",
                           pchbf::to_string(row.algorithm), row.snr_db, row.ser, row.ser_ci95, row.sum_rate_mean);
        for (const auto &path : result.files)
            fmt::print("wrote {}\n", path.string());
    }
    return 0;
}
