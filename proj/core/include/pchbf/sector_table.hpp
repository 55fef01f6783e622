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

#include "pchbf/clustering.hpp"
#include "pchbf/link_simulator.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace pchbf
{

// Offline sectorization result: the clusters, their centers and the phase
// table of every sector. Serialized as
//   {"algorithm", "k", "metric_kind", "n_rx", "n_subarrays",
//    "clusters": [[user ids]], "centers": [[[re, im], ...]], "phases": [[[rad]]]}
// and reloaded for online assignment of new users.
struct SectorTable
{
    std::string algorithm;
    MetricKind metric_kind = MetricKind::per_subarray;
    Index n_rx = 0;
    Index n_subarrays = 0;
    ClusterSet clusters;
    std::vector<ClusterCenter> centers;
    std::vector<RMat> phases; // one M x L table per sector (non-empty cluster)
};

SectorTable sector_table_from_plan(const SectorPlan &plan, const ArrayGeometry &geometry);

std::string sector_table_json(const SectorTable &table);

SectorTable parse_sector_table(std::string_view json);

} // namespace pchbf
