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
#include "pchbf/link_simulator.hpp"

#include "pchbf/error.hpp"

#include <fmt/format.h>

#include <string>

namespace pchbf
{

std::string_view to_string(Algorithm algorithm) noexcept
{
    switch (algorithm)
    {
    case Algorithm::hc_pc:
        return "hc-pc";
    case Algorithm::hc_full:
        return "hc-full";
    case Algorithm::hc_pc_mc:
        return "hc-pc-mc";
    case Algorithm::maxpower_1:
        return "maxpower-1";
    case Algorithm::maxpower_k:
        return "maxpower-k";
    case Algorithm::fully_digital:
        return "fully-digital";
    }
    return "unknown";
}

const std::vector<Algorithm> &all_algorithms()
{
    static const std::vector<Algorithm> all{Algorithm::hc_pc,      Algorithm::hc_full,    Algorithm::hc_pc_mc,
                                            Algorithm::maxpower_1, Algorithm::maxpower_k, Algorithm::fully_digital};
    return all;
}

Algorithm algorithm_from_string(std::string_view name)
{
    for (auto a : all_algorithms())
        if (to_string(a) == name)
            return a;
    throw Error(ErrorKind::invalid_argument, fmt::format("unknown algorithm '{}'", name));
}

std::string_view to_string(SectorMode mode) noexcept
{
    return mode == SectorMode::orthogonal_sectors ? "orthogonal" : "split";
}

SectorMode sector_mode_from_string(std::string_view name)
{
    if (name == "orthogonal" || name == "orthogonal-sectors")
        return SectorMode::orthogonal_sectors;
    if (name == "split" || name == "subarray-split")
        return SectorMode::subarray_split;
    throw Error(ErrorKind::invalid_argument, fmt::format("unknown sector mode '{}'", name));
}

namespace
{

Clustering cluster_users(const ChannelMatrix &h, Algorithm algorithm, Index k)
{
    const auto &g = h.geometry();
    switch (algorithm)
    {
    case Algorithm::hc_pc:
    case Algorithm::hc_pc_mc:
        return hierarchical_sectorization(h.entries(), k, MetricKind::per_subarray, g);
    case Algorithm::hc_full:
        return hierarchical_sectorization(h.entries(), k, MetricKind::full_array, g);
    case Algorithm::maxpower_1:
        return max_power_1(h.entries());
    case Algorithm::maxpower_k:
        return max_power_k(h.entries(), k, g);
    case Algorithm::fully_digital:
        return {ClusterSet::single(h.n_tx()), {}};
    }
    throw Error(ErrorKind::invalid_argument, "unknown algorithm");
}

AnalogBeamformer sector_beamformer(const ChannelMatrix &h, Algorithm algorithm, const Clustering &clustering,
                                   Index cluster)
{
    const auto &g = h.geometry();
    if (algorithm == Algorithm::hc_pc_mc)
    {
        std::vector<CVec> directions;
        for (Index u : clustering.clusters.clusters[static_cast<std::size_t>(cluster)])
            directions.push_back(user_direction(h.column(u)));
        return phases_multi_center(directions, g);
    }
    return phases_from_center(clustering.centers[static_cast<std::size_t>(cluster)], g);
}

DetectionGroup make_group(std::vector<Index> users, CMat fa, const CMat &h_users, SelectorKind selector,
                          Index n_beam)
{
    DetectionGroup group;
    group.users = std::move(users);
    const CMat eff = effective_channel(fa, h_users);
    group.selector = select_beamspace(selector, eff, n_beam);
    group.combiner = group.selector.matrix * fa;
    // rows of F_A share one norm and have disjoint supports: F_A F_A^H = c I
    group.noise_gain = fa.row(0).squaredNorm();
    group.fa = std::move(fa);
    return group;
}

} // namespace

SectorPlan build_sector_plan(const ChannelMatrix &h, Algorithm algorithm, Index k, Index n_beam,
                             const PlanOptions &options)
{
    if (k < 1)
        throw Error(ErrorKind::k_out_of_range, "k must be at least 1");

    SectorPlan plan;
    plan.algorithm = algorithm;
    plan.mode = options.mode;
    plan.clustering = cluster_users(h, algorithm, k);

    if (algorithm == Algorithm::fully_digital)
    {
        std::vector<Index> everyone(static_cast<std::size_t>(h.n_tx()));
        for (Index u = 0; u < h.n_tx(); ++u)
            everyone[static_cast<std::size_t>(u)] = u;
        plan.sector_clusters = {0};
        DetectionGroup group;
        group.users = std::move(everyone);
        group.fa = CMat::Identity(h.n_rx(), h.n_rx());
        group.selector = identity_beamspace(h.n_rx());
        group.combiner = CMat::Identity(h.n_rx(), h.n_rx());
        plan.groups.push_back(std::move(group));
        return plan;
    }

    for (Index c = 0; c < plan.clustering.clusters.k(); ++c)
        if (!plan.clustering.clusters.clusters[static_cast<std::size_t>(c)].empty())
        {
            plan.sector_clusters.push_back(c);
            plan.beamformers.push_back(sector_beamformer(h, algorithm, plan.clustering, c));
        }

    const auto n_sectors = static_cast<Index>(plan.sector_clusters.size());
    const auto &geometry = h.geometry();

    if (options.mode == SectorMode::orthogonal_sectors)
    {
        for (Index s = 0; s < n_sectors; ++s)
        {
            const auto &members = plan.clustering.clusters.clusters[static_cast<std::size_t>(
                plan.sector_clusters[static_cast<std::size_t>(s)])];
            plan.groups.push_back(make_group(members, build_fa(plan.beamformers[static_cast<std::size_t>(s)],
                                                               options.fa_scaling),
                                             h.columns(members), options.selector, n_beam));
        }
        plan.rate_weight = 1.0 / static_cast<double>(n_sectors);
        return plan;
    }

    // subarray_split: contiguous runs of subarrays per sector, earlier sectors
    // take the remainder
    const Index m_total = geometry.n_subarrays();
    if (n_sectors > m_total)
        throw Error(ErrorKind::k_out_of_range,
                    fmt::format("{} sectors cannot split {} subarrays", n_sectors, m_total));
    plan.subarray_owner.resize(static_cast<std::size_t>(m_total));
    Index m = 0;
    for (Index s = 0; s < n_sectors; ++s)
    {
        const Index share = m_total / n_sectors + (s < m_total % n_sectors ? 1 : 0);
        for (Index j = 0; j < share; ++j, ++m)
            plan.subarray_owner[static_cast<std::size_t>(m)] = s;
    }

    std::vector<CMat> sector_fa;
    for (const auto &bf : plan.beamformers)
        sector_fa.push_back(build_fa(bf, options.fa_scaling));
    CMat fa(m_total, geometry.n_rx());
    for (Index row = 0; row < m_total; ++row)
        fa.row(row) = sector_fa[static_cast<std::size_t>(plan.subarray_owner[static_cast<std::size_t>(row)])].row(row);
    std::vector<Index> everyone(static_cast<std::size_t>(h.n_tx()));
    for (Index u = 0; u < h.n_tx(); ++u)
        everyone[static_cast<std::size_t>(u)] = u;
    plan.groups.push_back(make_group(everyone, std::move(fa), h.entries(), options.selector, n_beam));
    plan.rate_weight = 1.0;
    return plan;
}

} // namespace pchbf
