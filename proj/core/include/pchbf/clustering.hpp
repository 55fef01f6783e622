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
#include "pchbf/linalg.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace pchbf
{

// Which user-to-user distance drives the clustering.
//   full_array:   d(i,j) = 1 - |u_i^H u_j|
//   per_subarray: d(i,j) = 1 - sum_m |(u_i^m)^H u_j^m|   (subarray-aware)
enum class MetricKind
{
    full_array,
    per_subarray,
};

std::string_view to_string(MetricKind kind) noexcept;
MetricKind metric_kind_from_string(std::string_view name);

double user_distance_full(const CVec &u_i, const CVec &u_j);
double user_distance_pc(const CVec &u_i, const CVec &u_j, const ArrayGeometry &geometry);
double user_distance(const CVec &u_i, const CVec &u_j, MetricKind kind, const ArrayGeometry &geometry);

struct DistanceMatrix
{
    RMat values;
    MetricKind metric_kind = MetricKind::per_subarray;

    Index size() const noexcept { return values.rows(); }
};

DistanceMatrix build_distance_matrix(std::span<const CVec> users, MetricKind kind, const ArrayGeometry &geometry);

// Partition of users 0..n-1 into k groups. Clusters list members in ascending
// order; assignment[i] is the index of the cluster holding user i.
struct ClusterSet
{
    std::vector<Index> assignment;
    std::vector<std::vector<Index>> clusters;

    Index k() const noexcept { return static_cast<Index>(clusters.size()); }
    Index n_users() const noexcept { return static_cast<Index>(assignment.size()); }

    // Throws invariant_violation unless clusters are disjoint, jointly cover all
    // users and agree with assignment. Empty clusters are only accepted when
    // allow_empty is set.
    void validate(bool allow_empty = false) const;

    static ClusterSet from_assignment(std::vector<Index> assignment, Index k);
    static ClusterSet single(Index n_users);

    bool operator==(const ClusterSet &) const = default;
};

// Agglomerative complete-linkage clustering down to exactly k clusters.
//
// Starts from singletons and repeatedly merges the two clusters whose largest
// cross-pair distance is smallest. A cluster is identified by its smallest
// member; equal-distance candidates are resolved by the lexicographically
// smallest (id_a, id_b) pair. Output clusters are ordered by smallest member.
ClusterSet hierarchical_cluster(const DistanceMatrix &d, Index k);

struct ClusterCenter
{
    Index cluster = 0;
    CVec vector; // unit norm, largest-magnitude entry real and non-negative
};

// Dominant left singular vector of the cluster's channel submatrix.
ClusterCenter cluster_center(const CMat &h_k, Index cluster_index = 0);

// A single user's direction, i.e. the center of a one-column cluster.
CVec user_direction(const CVec &h);

struct Clustering
{
    ClusterSet clusters;
    std::vector<ClusterCenter> centers; // centers[c] belongs to clusters.clusters[c]
};

// Complete-linkage clustering of user directions followed by per-cluster centers.
Clustering hierarchical_sectorization(const CMat &h, Index k, MetricKind kind, const ArrayGeometry &geometry);

// One cluster holding every user, centered on the dominant direction of H.
Clustering max_power_1(const CMat &h);

// Centers are the k dominant left singular vectors of H; every user joins the
// center at the smallest per-subarray distance. Clusters may come out empty.
Clustering max_power_k(const CMat &h, Index k, const ArrayGeometry &geometry);

// Nearest center by per-subarray distance; lowest index wins ties.
Index assign_user(const CVec &u, std::span<const ClusterCenter> centers, const ArrayGeometry &geometry);

} // namespace pchbf
