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
#include "pchbf/detection.hpp"
#include "pchbf/error.hpp"
#include "pchbf/link_simulator.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numeric>

namespace pchbf
{

std::int64_t TrialReport::total_errors() const
{
    return std::accumulate(symbol_errors.begin(), symbol_errors.end(), std::int64_t{0});
}

std::int64_t TrialReport::total_symbols() const
{
    return std::accumulate(symbols_sent.begin(), symbols_sent.end(), std::int64_t{0});
}

double noise_variance(double snr_db)
{
    if (!std::isfinite(snr_db))
        throw Error(ErrorKind::invalid_argument, "SNR must be finite");
    return std::pow(10.0, -snr_db / 10.0);
}

TrialRealization draw_realization(Index n_rx, Index n_tx, Index n_symbols, Index n_noise_slots, Rng &rng)
{
    if (n_rx < 1 || n_tx < 1 || n_symbols < 1 || n_noise_slots < 1)
        throw Error(ErrorKind::invalid_argument, "realization dimensions must be positive");

    TrialRealization r;
    std::uniform_int_distribution<int> label(0, Qam16::order - 1);
    r.labels.resize(n_tx, n_symbols);
    for (Index u = 0; u < n_tx; ++u)
        for (Index s = 0; s < n_symbols; ++s)
            r.labels(u, s) = label(rng);

    // Slots are drawn in order after the labels, so slot g is the same no
    // matter how many slots are requested.
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    r.noise.reserve(static_cast<std::size_t>(n_noise_slots));
    for (Index slot = 0; slot < n_noise_slots; ++slot)
    {
        CMat w(n_rx, n_symbols);
        for (Index s = 0; s < n_symbols; ++s)
            for (Index a = 0; a < n_rx; ++a)
            {
                const double re = normal(rng);
                const double im = normal(rng);
                w(a, s) = cplx(re, im);
            }
        r.noise.push_back(std::move(w));
    }
    return r;
}

TrialReport run_trial(const ChannelMatrix &h, const SectorPlan &plan, double snr_db, const Qam16 &scheme,
                      const TrialRealization &realization)
{
    const Index n_tx = h.n_tx();
    if (plan.clustering.clusters.n_users() != n_tx)
        throw Error(ErrorKind::dimension_mismatch,
                    fmt::format("plan covers {} users, channel has {}", plan.clustering.clusters.n_users(), n_tx));
    if (realization.labels.rows() != n_tx)
        throw Error(ErrorKind::dimension_mismatch, "realization user count differs from channel");
    if (realization.noise.size() < plan.groups.size())
        throw Error(ErrorKind::dimension_mismatch,
                    fmt::format("{} noise slots for {} detection groups", realization.noise.size(), plan.groups.size()));

    const double sigma2 = noise_variance(snr_db);
    const double sigma = std::sqrt(sigma2);
    const Index n_sym = realization.n_symbols();

    TrialReport report;
    report.algorithm = plan.algorithm;
    report.snr_db = snr_db;
    report.symbol_errors.assign(static_cast<std::size_t>(n_tx), 0);
    report.symbols_sent.assign(static_cast<std::size_t>(n_tx), 0);
    report.post_sinr.assign(static_cast<std::size_t>(n_tx), 0.0);

    double rate_total = 0.0;
    for (std::size_t g = 0; g < plan.groups.size(); ++g)
    {
        const DetectionGroup &group = plan.groups[g];
        const CMat &noise = realization.noise[g];
        if (noise.rows() != h.n_rx() || noise.cols() != n_sym)
            throw Error(ErrorKind::dimension_mismatch, "noise slot shape differs from channel/realization");
        if (group.combiner.cols() != h.n_rx())
            throw Error(ErrorKind::dimension_mismatch, "combiner width differs from n_rx");

        const auto n_users = static_cast<Index>(group.users.size());
        const CMat h_eff = group.combiner * h.columns(group.users);

        CMat x(n_users, n_sym);
        for (Index j = 0; j < n_users; ++j)
            for (Index s = 0; s < n_sym; ++s)
                x(j, s) = scheme.point(realization.labels(group.users[static_cast<std::size_t>(j)], s));

        const CMat y = h_eff * x + sigma * (group.combiner * noise);
        const double nv = sigma2 * group.noise_gain;
        const CMat x_hat = mmse_filter(h_eff, nv) * y;

        CMat gram = h_eff.adjoint() * h_eff;
        gram.diagonal().array() += std::max(nv, min_noise_var);
        const CMat gram_inv = gram.ldlt().solve(CMat::Identity(n_users, n_users));

        for (Index j = 0; j < n_users; ++j)
        {
            const auto u = static_cast<std::size_t>(group.users[static_cast<std::size_t>(j)]);
            std::int64_t errors = 0;
            for (Index s = 0; s < n_sym; ++s)
                if (scheme.demodulate_label(x_hat(j, s)) != realization.labels(static_cast<Index>(u), s))
                    ++errors;
            report.symbol_errors[u] += errors;
            report.symbols_sent[u] += n_sym;
            const double mse = std::max(nv, min_noise_var) * gram_inv(j, j).real();
            report.post_sinr[u] = 1.0 / mse - 1.0;
        }

        const double rate = sum_rate(h_eff, std::max(nv, min_noise_var));
        report.group_sum_rates.push_back(rate);
        rate_total += rate;
    }
    report.sum_rate = plan.rate_weight * rate_total;
    return report;
}

TrialReport run_trial(const ChannelMatrix &h, const SectorPlan &plan, double snr_db, const Qam16 &scheme, Rng &rng,
                      Index n_symbols)
{
    const auto slots = std::max<Index>(1, static_cast<Index>(plan.groups.size()));
    return run_trial(h, plan, snr_db, scheme, draw_realization(h.n_rx(), h.n_tx(), n_symbols, slots, rng));
}

} // namespace pchbf
