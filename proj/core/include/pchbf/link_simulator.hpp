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

#include "pchbf/array_channel.hpp"
#include "pchbf/clustering.hpp"
#include "pchbf/hybrid_beamforming.hpp"
#include "pchbf/modulation.hpp"
#include "pchbf/random.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pchbf
{

enum class Algorithm
{
    hc_pc,         // complete linkage on per-subarray distance, SVD centers
    hc_full,       // complete linkage on full-array distance, SVD centers
    hc_pc_mc,      // hc_pc clusters, subarrays steered at individual users
    maxpower_1,    // one sector on the dominant direction of H
    maxpower_k,    // k dominant directions of H, nearest-center assignment
    fully_digital, // no phase shifters, one ADC per antenna
};

std::string_view to_string(Algorithm algorithm) noexcept;
Algorithm algorithm_from_string(std::string_view name);
const std::vector<Algorithm> &all_algorithms();

enum class SectorMode
{
    orthogonal_sectors, // each sector on its own resource, full panel retuned per sector
    subarray_split,     // subarrays partitioned across sectors, all users detected jointly
};

std::string_view to_string(SectorMode mode) noexcept;
SectorMode sector_mode_from_string(std::string_view name);

struct PlanOptions
{
    SectorMode mode = SectorMode::orthogonal_sectors;
    SelectorKind selector = SelectorKind::fft_subset;
    FaScaling fa_scaling = FaScaling::normalized;
};

// Users sharing one resource and one receive chain F_D * F_A.
struct DetectionGroup
{
    std::vector<Index> users;
    CMat fa;                    // M x n_rx analog stage
    BeamspaceSelector selector; // n_beam x M digital stage
    CMat combiner;              // selector.matrix * fa
    double noise_gain = 1.0;    // combined noise covariance = noise_gain * noise_var * I
};

struct SectorPlan
{
    Algorithm algorithm = Algorithm::hc_pc;
    SectorMode mode = SectorMode::orthogonal_sectors;
    Clustering clustering;
    std::vector<Index> sector_clusters;          // non-empty clusters, one per sector
    std::vector<AnalogBeamformer> beamformers;   // one per sector (empty for fully digital)
    std::vector<Index> subarray_owner;           // subarray_split: sector owning each subarray
    std::vector<DetectionGroup> groups;
    double rate_weight = 1.0;                    // resource share applied to the sum rate
};

SectorPlan build_sector_plan(const ChannelMatrix &h, Algorithm algorithm, Index k, Index n_beam,
                             const PlanOptions &options = {});

// Random draws for one trial, shared by every algorithm and SNR point.
// noise[g] is unit-variance antenna noise (n_rx x n_symbols) for detection
// group g.
struct TrialRealization
{
    Eigen::MatrixXi labels; // n_tx x n_symbols QAM labels
    std::vector<CMat> noise;

    Index n_symbols() const noexcept { return labels.cols(); }
};

TrialRealization draw_realization(Index n_rx, Index n_tx, Index n_symbols, Index n_noise_slots, Rng &rng);

struct TrialReport
{
    Algorithm algorithm = Algorithm::hc_pc;
    double snr_db = 0.0;
    std::vector<std::int64_t> symbol_errors; // per user
    std::vector<std::int64_t> symbols_sent;  // per user
    std::vector<double> post_sinr;           // per user, linear MMSE output SINR
    std::vector<double> group_sum_rates;     // unweighted, per detection group
    double sum_rate = 0.0;                   // rate_weight * sum of group rates

    std::int64_t total_errors() const;
    std::int64_t total_symbols() const;

    bool operator==(const TrialReport &) const = default;
};

// Noise variance per receive antenna for unit-energy symbols.
double noise_variance(double snr_db);

TrialReport run_trial(const ChannelMatrix &h, const SectorPlan &plan, double snr_db, const Qam16 &scheme,
                      const TrialRealization &realization);

TrialReport run_trial(const ChannelMatrix &h, const SectorPlan &plan, double snr_db, const Qam16 &scheme, Rng &rng,
                      Index n_symbols = 48);

struct Scenario
{
    ArrayGeometry geometry = ArrayGeometry::linear(64, 8);
    DropLayout drop;
    Index k = 3;
    Index n_beam = 4;
    Index symbols_per_trial = 48;
    PlanOptions options;
};

struct SweepSettings
{
    std::vector<Algorithm> algorithms;
    std::vector<double> snr_db;
    Index n_drops = 1;
    Index noise_seeds = 1; // noise realizations per drop
    std::uint64_t master_seed = 1;
    unsigned workers = 1;
    bool keep_trial_reports = false;
};

struct SweepRow
{
    Algorithm algorithm = Algorithm::hc_pc;
    double snr_db = 0.0;
    std::int64_t trials = 0;
    std::int64_t symbols = 0;
    std::int64_t errors = 0;
    double ser = 0.0;
    double ser_ci95 = 0.0; // Wilson half-width
    double wilson_lo = 0.0;
    double wilson_hi = 0.0;
    double sum_rate_mean = 0.0;
};

struct SweepReport
{
    std::vector<SweepRow> rows; // algorithm-major, SNR-minor
    std::int64_t n_trials = 0;
    std::uint64_t master_seed = 0;
    std::vector<double> algorithm_seconds;   // wall time per algorithm, summed over workers
    std::vector<TrialReport> trial_reports; // filled when keep_trial_reports is set

    const SweepRow &row(Algorithm algorithm, double snr_db) const;
};

struct WilsonInterval
{
    double center = 0.0;
    double half_width = 0.0;
    double lo() const noexcept { return center - half_width; }
    double hi() const noexcept { return center + half_width; }
};

// 95% Wilson score interval for errors out of trials Bernoulli draws.
WilsonInterval wilson_interval(std::int64_t errors, std::int64_t trials);

// Trial t = drop * noise_seeds + s draws its channel from child_rng(master, {drop, 0})
// and its symbols/noise from child_rng(master, {drop, s + 1}); results do not
// depend on the worker count.
SweepReport monte_carlo(const Scenario &scenario, const SweepSettings &settings);

// Columns: algorithm,snr_db,trials,symbols,errors,ser,ser_ci95,sum_rate_mean
std::string sweep_csv(const SweepReport &report);

} // namespace pchbf
