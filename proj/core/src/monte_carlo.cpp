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
#include "pchbf/error.hpp"
#include "pchbf/link_simulator.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace pchbf
{

namespace
{

constexpr double z95 = 1.959963984540054;

// Outcome of one trial for every (algorithm, snr) cell, cell = a * n_snr + p.
struct TrialOutcome
{
    std::vector<std::int64_t> errors;
    std::vector<std::int64_t> symbols;
    std::vector<double> rates;
    std::vector<TrialReport> reports;
};

} // namespace

WilsonInterval wilson_interval(std::int64_t errors, std::int64_t trials)
{
    if (trials <= 0)
        return {0.0, 0.0};
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(errors) / n;
    const double z2 = z95 * z95;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z95 / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    return {center, half};
}

const SweepRow &SweepReport::row(Algorithm algorithm, double snr_db) const
{
    for (const auto &r : rows)
        if (r.algorithm == algorithm && r.snr_db == snr_db)
            return r;
    throw Error(ErrorKind::index_out_of_range,
                fmt::format("no sweep row for {} at {} dB", to_string(algorithm), snr_db));
}

SweepReport monte_carlo(const Scenario &scenario, const SweepSettings &settings)
{
    if (settings.algorithms.empty())
        throw Error(ErrorKind::invalid_argument, "sweep needs at least one algorithm");
    if (settings.snr_db.empty())
        throw Error(ErrorKind::invalid_argument, "sweep needs at least one SNR point");
    if (settings.n_drops < 1 || settings.noise_seeds < 1)
        throw Error(ErrorKind::invalid_argument, "sweep needs at least one trial");
    if (scenario.symbols_per_trial < 1)
        throw Error(ErrorKind::invalid_argument, "symbols_per_trial must be positive");

    const auto n_alg = settings.algorithms.size();
    const auto n_snr = settings.snr_db.size();
    const Index n_trials = settings.n_drops * settings.noise_seeds;
    const Qam16 scheme;

    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(n_trials));
    std::atomic<Index> next_drop{0};
    std::mutex failure_mutex;
    std::exception_ptr failure;
    std::vector<std::vector<double>> seconds(std::max(1u, settings.workers), std::vector<double>(n_alg, 0.0));

    auto worker = [&](unsigned id) {
        using clock = std::chrono::steady_clock;
        auto &my_seconds = seconds[id];
        try
        {
            for (Index d = next_drop++; d < settings.n_drops; d = next_drop++)
            {
                Rng drop_rng = child_rng(settings.master_seed, {static_cast<std::uint64_t>(d), 0});
                const ChannelMatrix h = generate_drop(scenario.geometry, scenario.drop, drop_rng);

                std::vector<SectorPlan> plans;
                Index slots = 1;
                for (std::size_t a = 0; a < n_alg; ++a)
                {
                    const auto t0 = clock::now();
                    plans.push_back(build_sector_plan(h, settings.algorithms[a], scenario.k, scenario.n_beam,
                                                      scenario.options));
                    my_seconds[a] += std::chrono::duration<double>(clock::now() - t0).count();
                    slots = std::max(slots, static_cast<Index>(plans.back().groups.size()));
                }

                for (Index s = 0; s < settings.noise_seeds; ++s)
                {
                    Rng noise_rng = child_rng(settings.master_seed,
                                              {static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(s + 1)});
                    const TrialRealization realization =
                        draw_realization(h.n_rx(), h.n_tx(), scenario.symbols_per_trial, slots, noise_rng);

                    TrialOutcome &out = outcomes[static_cast<std::size_t>(d * settings.noise_seeds + s)];
                    out.errors.assign(n_alg * n_snr, 0);
                    out.symbols.assign(n_alg * n_snr, 0);
                    out.rates.assign(n_alg * n_snr, 0.0);
                    for (std::size_t a = 0; a < n_alg; ++a)
                    {
                        const auto t0 = clock::now();
                        for (std::size_t p = 0; p < n_snr; ++p)
                        {
                            TrialReport report = run_trial(h, plans[a], settings.snr_db[p], scheme, realization);
                            const std::size_t cell = a * n_snr + p;
                            out.errors[cell] = report.total_errors();
                            out.symbols[cell] = report.total_symbols();
                            out.rates[cell] = report.sum_rate;
                            if (settings.keep_trial_reports)
                                out.reports.push_back(std::move(report));
                        }
                        my_seconds[a] += std::chrono::duration<double>(clock::now() - t0).count();
                    }
                }
            }
        }
        catch (...)
        {
            std::lock_guard lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
            next_drop = settings.n_drops;
        }
    };

    const unsigned n_workers = std::max(1u, settings.workers);
    if (n_workers == 1)
    {
        worker(0);
    }
    else
    {
        std::vector<std::thread> pool;
        for (unsigned id = 0; id < n_workers; ++id)
            pool.emplace_back(worker, id);
        for (auto &t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    SweepReport report;
    report.n_trials = n_trials;
    report.master_seed = settings.master_seed;
    report.algorithm_seconds.assign(n_alg, 0.0);
    for (const auto &per_worker : seconds)
        for (std::size_t a = 0; a < n_alg; ++a)
            report.algorithm_seconds[a] += per_worker[a];

    for (std::size_t a = 0; a < n_alg; ++a)
        for (std::size_t p = 0; p < n_snr; ++p)
        {
            const std::size_t cell = a * n_snr + p;
            SweepRow row;
            row.algorithm = settings.algorithms[a];
            row.snr_db = settings.snr_db[p];
            row.trials = n_trials;
            double rate_sum = 0.0;
            for (const auto &out : outcomes)
            {
                row.errors += out.errors[cell];
                row.symbols += out.symbols[cell];
                rate_sum += out.rates[cell];
            }
            row.ser = row.symbols > 0 ? static_cast<double>(row.errors) / static_cast<double>(row.symbols) : 0.0;
            const WilsonInterval ci = wilson_interval(row.errors, row.symbols);
            row.ser_ci95 = ci.half_width;
            row.wilson_lo = ci.lo();
            row.wilson_hi = ci.hi();
            row.sum_rate_mean = rate_sum / static_cast<double>(n_trials);
            report.rows.push_back(row);
        }

    if (settings.keep_trial_reports)
        for (auto &out : outcomes)
            for (auto &r : out.reports)
                report.trial_reports.push_back(std::move(r));
    return report;
}

std::string sweep_csv(const SweepReport &report)
{
    std::string out = "algorithm,snr_db,trials,symbols,errors,ser,ser_ci95,sum_rate_mean\n";
    for (const auto &r : report.rows)
        out += fmt::format("{},{:.12g},{},{},{},{:.12g},{:.12g},{:.12g}\n", to_string(r.algorithm), r.snr_db, r.trials,
                           r.symbols, r.errors, r.ser, r.ser_ci95, r.sum_rate_mean);
    return out;
}

} // namespace pchbf
