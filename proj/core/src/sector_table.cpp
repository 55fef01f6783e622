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
#include "pchbf/sector_table.hpp"

#include "format_util.hpp"
#include "pchbf/error.hpp"

#include <json.hpp>

namespace pchbf
{

using nlohmann::json;
using detail::round_sig12;

SectorTable sector_table_from_plan(const SectorPlan &plan, const ArrayGeometry &geometry)
{
    if (plan.algorithm == Algorithm::fully_digital)
        throw Error(ErrorKind::invalid_argument, "a fully digital plan has no analog sectors to export");
    SectorTable table;
    table.algorithm = std::string(to_string(plan.algorithm));
    table.metric_kind = plan.algorithm == Algorithm::hc_full ? MetricKind::full_array : MetricKind::per_subarray;
    table.n_rx = geometry.n_rx();
    table.n_subarrays = geometry.n_subarrays();
    table.clusters = plan.clustering.clusters;
    table.centers = plan.clustering.centers;
    for (const auto &bf : plan.beamformers)
        table.phases.push_back(bf.phases());
    return table;
}

std::string sector_table_json(const SectorTable &table)
{
    json doc;
    doc["algorithm"] = table.algorithm;
    doc["k"] = table.clusters.k();
    doc["metric_kind"] = std::string(to_string(table.metric_kind));
    doc["n_rx"] = table.n_rx;
    doc["n_subarrays"] = table.n_subarrays;

    json clusters = json::array();
    for (const auto &c : table.clusters.clusters)
        clusters.push_back(c);
    doc["clusters"] = clusters;

    json centers = json::array();
    for (const auto &c : table.centers)
    {
        json v = json::array();
        for (Index i = 0; i < c.vector.size(); ++i)
            v.push_back({round_sig12(c.vector(i).real()), round_sig12(c.vector(i).imag())});
        centers.push_back(v);
    }
    doc["centers"] = centers;

    json phases = json::array();
    for (const auto &p : table.phases)
    {
        json rows = json::array();
        for (Index m = 0; m < p.rows(); ++m)
        {
            json row = json::array();
            for (Index l = 0; l < p.cols(); ++l)
                row.push_back(round_sig12(p(m, l)));
            rows.push_back(row);
        }
        phases.push_back(rows);
    }
    doc["phases"] = phases;
    return doc.dump(2) + "\n";
}

SectorTable parse_sector_table(std::string_view text)
{
    json doc;
    try
    {
        doc = json::parse(text.begin(), text.end());
    }
    catch (const json::parse_error &e)
    {
        throw Error(ErrorKind::parse_error, fmt::format("sector table at byte {}: {}", e.byte, e.what()));
    }

    try
    {
        SectorTable table;
        table.algorithm = doc.at("algorithm").get<std::string>();
        table.metric_kind = metric_kind_from_string(doc.at("metric_kind").get<std::string>());
        table.n_rx = doc.at("n_rx").get<Index>();
        table.n_subarrays = doc.at("n_subarrays").get<Index>();
        const auto k = doc.at("k").get<Index>();

        const auto lists = doc.at("clusters").get<std::vector<std::vector<Index>>>();
        if (static_cast<Index>(lists.size()) != k)
            throw Error(ErrorKind::invariant_violation, "k does not match the number of clusters");
        Index n_users = 0;
        for (const auto &c : lists)
            n_users += static_cast<Index>(c.size());
        std::vector<Index> assignment(static_cast<std::size_t>(n_users), -1);
        for (std::size_t c = 0; c < lists.size(); ++c)
            for (Index u : lists[c])
            {
                if (u < 0 || u >= n_users)
                    throw Error(ErrorKind::invariant_violation, fmt::format("user id {} out of range", u));
                assignment[static_cast<std::size_t>(u)] = static_cast<Index>(c);
            }
        table.clusters.assignment = std::move(assignment);
        table.clusters.clusters = lists;
        table.clusters.validate(true);

        const auto &centers = doc.at("centers");
        for (std::size_t c = 0; c < centers.size(); ++c)
        {
            const auto &entries = centers[c];
            CVec v(static_cast<Index>(entries.size()));
            for (std::size_t i = 0; i < entries.size(); ++i)
                v(static_cast<Index>(i)) = cplx(entries[i].at(0).get<double>(), entries[i].at(1).get<double>());
            if (v.size() != table.n_rx)
                throw Error(ErrorKind::dimension_mismatch, fmt::format("center {} has length {}", c, v.size()));
            table.centers.push_back({static_cast<Index>(c), std::move(v)});
        }

        for (const auto &sector : doc.at("phases"))
        {
            const auto rows = sector.get<std::vector<std::vector<double>>>();
            RMat p(static_cast<Index>(rows.size()), rows.empty() ? 0 : static_cast<Index>(rows.front().size()));
            for (std::size_t m = 0; m < rows.size(); ++m)
            {
                if (static_cast<Index>(rows[m].size()) != p.cols())
                    throw Error(ErrorKind::dimension_mismatch, "ragged phase table");
                for (std::size_t l = 0; l < rows[m].size(); ++l)
                    p(static_cast<Index>(m), static_cast<Index>(l)) = rows[m][l];
            }
            table.phases.push_back(std::move(p));
        }
        return table;
    }
    catch (const json::exception &e)
    {
        throw Error(ErrorKind::parse_error, fmt::format("sector table: {}", e.what()));
    }
}

} // namespace pchbf
