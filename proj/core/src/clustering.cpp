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
#include "pchbf/clustering.hpp"

#include "pchbf/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace pchbf
{

namespace
{

void require_same_length(const CVec &a, const CVec &b)
{
    if (a.size() != b.size())
        throw Error(ErrorKind::dimension_mismatch,
                    "vectors of length " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
}

double inner_modulus(const CVec &a, const CVec &b, Index offset, Index len)
{
    return std::abs(a.segment(offset, len).dot(b.segment(offset, len)));
}

} // namespace

std::string_view to_string(MetricKind kind) noexcept
{
    return kind == MetricKind::full_array ? "full-array" : "per-subarray";
}

MetricKind metric_kind_from_string(std::string_view name)
{
    if (name == "full-array")
        return MetricKind::full_array;
    if (name == "per-subarray")
        return MetricKind::per_subarray;
    throw Error(ErrorKind::invalid_argument, "unknown metric kind '" + std::string(name) + "'");
}

double user_distance_full(const CVec &u_i, const CVec &u_j)
{
    require_same_length(u_i, u_j);
    require_unit_norm(u_i, "u_i");
    require_unit_norm(u_j, "u_j");
    return std::max(0.0, 1.0 - inner_modulus(u_i, u_j, 0, u_i.size()));
}

double user_distance_pc(const CVec &u_i, const CVec &u_j, const ArrayGeometry &geometry)
{
    require_same_length(u_i, u_j);
    if (u_i.size() != geometry.n_rx())
        throw Error(ErrorKind::dimension_mismatch, "vector length " + std::to_string(u_i.size()) +
                                                       " != n_rx " + std::to_string(geometry.n_rx()));
    require_unit_norm(u_i, "u_i");
    require_unit_norm(u_j, "u_j");

    const Index L = geometry.subarray_size();
    double coherent = 0.0;
    for (Index m = 0; m < geometry.n_subarrays(); ++m)
        coherent += inner_modulus(u_i, u_j, m * L, L);
    return std::max(0.0, 1.0 - coherent);
}

double user_distance(const CVec &u_i, const CVec &u_j, MetricKind kind, const ArrayGeometry &geometry)
{
    return kind == MetricKind::full_array ? user_distance_full(u_i, u_j) : user_distance_pc(u_i, u_j, geometry);
}

DistanceMatrix build_distance_matrix(std::span<const CVec> users, MetricKind kind, const ArrayGeometry &geometry)
{
    if (users.size() < 2)
        throw Error(ErrorKind::invalid_argument, "distance matrix needs at least 2 users");
    const auto n = static_cast<Index>(users.size());
    DistanceMatrix d{RMat::Zero(n, n), kind};
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
        {
            const double v = user_distance(users[static_cast<std::size_t>(i)], users[static_cast<std::size_t>(j)],
                                           kind, geometry);
            d.values(i, j) = v;
            d.values(j, i) = v;
        }
    return d;
}

void ClusterSet::validate(bool allow_empty) const
{
    std::vector<int> seen(assignment.size(), 0);
    for (std::size_t c = 0; c < clusters.size(); ++c)
    {
        if (clusters[c].empty() && !allow_empty)
            throw Error(ErrorKind::invariant_violation, "cluster " + std::to_string(c) + " is empty");
        for (Index u : clusters[c])
        {
            if (u < 0 || u >= n_users())
                throw Error(ErrorKind::invariant_violation, "cluster member " + std::to_string(u) + " out of range");
            if (seen[static_cast<std::size_t>(u)]++ != 0)
                throw Error(ErrorKind::invariant_violation, "user " + std::to_string(u) + " in two clusters");
            if (assignment[static_cast<std::size_t>(u)] != static_cast<Index>(c))
                throw Error(ErrorKind::invariant_violation,
                            "assignment of user " + std::to_string(u) + " disagrees with cluster lists");
        }
    }
    for (std::size_t u = 0; u < seen.size(); ++u)
        if (seen[u] == 0)
            throw Error(ErrorKind::invariant_violation, "user " + std::to_string(u) + " is not in any cluster");
}

ClusterSet ClusterSet::from_assignment(std::vector<Index> assignment, Index k)
{
    ClusterSet out;
    out.clusters.resize(static_cast<std::size_t>(k));
    for (std::size_t u = 0; u < assignment.size(); ++u)
    {
        const Index c = assignment[u];
        if (c < 0 || c >= k)
            throw Error(ErrorKind::index_out_of_range, "cluster index " + std::to_string(c));
        out.clusters[static_cast<std::size_t>(c)].push_back(static_cast<Index>(u));
    }
    out.assignment = std::move(assignment);
    return out;
}

ClusterSet ClusterSet::single(Index n_users)
{
    return from_assignment(std::vector<Index>(static_cast<std::size_t>(n_users), 0), 1);
}

ClusterSet hierarchical_cluster(const DistanceMatrix &d, Index k)
{
    const Index n = d.size();
    if (d.values.cols() != n)
        throw Error(ErrorKind::dimension_mismatch, "distance matrix is not square");
    if (k < 1 || k > n)
        throw Error(ErrorKind::k_out_of_range,
                    "k = " + std::to_string(k) + " with " + std::to_string(n) + " users");

    // Slot i holds the cluster whose smallest member is i; linkage(a, b) is the
    // complete-linkage distance between live slots a and b.
    RMat linkage = d.values;
    std::vector<bool> live(static_cast<std::size_t>(n), true);
    std::vector<Index> owner(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i)
        owner[static_cast<std::size_t>(i)] = i;

    for (Index remaining = n; remaining > k; --remaining)
    {
        Index best_a = -1, best_b = -1;
        double best = std::numeric_limits<double>::infinity();
        for (Index a = 0; a < n; ++a)
        {
            if (!live[static_cast<std::size_t>(a)])
                continue;
            for (Index b = a + 1; b < n; ++b)
            {
                if (!live[static_cast<std::size_t>(b)])
                    continue;
                // strict '<' keeps the lexicographically first pair on ties
                if (linkage(a, b) < best || best_a < 0)
                {
                    best = linkage(a, b);
                    best_a = a;
                    best_b = b;
                }
            }
        }

        live[static_cast<std::size_t>(best_b)] = false;
        for (Index x = 0; x < n; ++x)
        {
            const double merged = std::max(linkage(best_a, x), linkage(best_b, x));
            linkage(best_a, x) = merged;
            linkage(x, best_a) = merged;
        }
        for (auto &o : owner)
            if (o == best_b)
                o = best_a;
    }

    std::vector<Index> slot_to_cluster(static_cast<std::size_t>(n), -1);
    Index next = 0;
    for (Index i = 0; i < n; ++i)
        if (live[static_cast<std::size_t>(i)])
            slot_to_cluster[static_cast<std::size_t>(i)] = next++;

    std::vector<Index> assignment(static_cast<std::size_t>(n));
    for (Index u = 0; u < n; ++u)
        assignment[static_cast<std::size_t>(u)] = slot_to_cluster[static_cast<std::size_t>(owner[static_cast<std::size_t>(u)])];
    return ClusterSet::from_assignment(std::move(assignment), k);
}

ClusterCenter cluster_center(const CMat &h_k, Index cluster_index)
{
    if (h_k.cols() == 0 || h_k.rows() == 0)
        throw Error(ErrorKind::degenerate_cluster, "cluster " + std::to_string(cluster_index) + " has no columns");
    if (h_k.isZero(0.0))
        throw Error(ErrorKind::degenerate_cluster, "cluster " + std::to_string(cluster_index) + " channel is zero");
    if (!h_k.allFinite())
        throw Error(ErrorKind::invalid_argument, "cluster channel contains NaN or Inf");

    CVec u = h_k.cols() == 1 ? CVec(h_k.col(0) / h_k.col(0).norm()) : CVec(top_left_singular_vectors(h_k, 1).col(0));
    return {cluster_index, fix_global_phase(std::move(u))};
}

CVec user_direction(const CVec &h)
{
    return cluster_center(h).vector;
}

Clustering hierarchical_sectorization(const CMat &h, Index k, MetricKind kind, const ArrayGeometry &geometry)
{
    if (h.rows() != geometry.n_rx())
        throw Error(ErrorKind::dimension_mismatch, "channel rows != n_rx");
    if (k < 1 || k > h.cols())
        throw Error(ErrorKind::k_out_of_range,
                    "k = " + std::to_string(k) + " with " + std::to_string(h.cols()) + " users");

    Clustering out;
    if (h.cols() == 1)
    {
        out.clusters = ClusterSet::single(1);
    }
    else
    {
        std::vector<CVec> directions;
        directions.reserve(static_cast<std::size_t>(h.cols()));
        for (Index j = 0; j < h.cols(); ++j)
            directions.push_back(user_direction(h.col(j)));
        out.clusters = hierarchical_cluster(build_distance_matrix(directions, kind, geometry), k);
    }

    for (Index c = 0; c < out.clusters.k(); ++c)
    {
        const auto &members = out.clusters.clusters[static_cast<std::size_t>(c)];
        CMat sub(h.rows(), static_cast<Index>(members.size()));
        for (std::size_t j = 0; j < members.size(); ++j)
            sub.col(static_cast<Index>(j)) = h.col(members[j]);
        out.centers.push_back(cluster_center(sub, c));
    }
    return out;
}

Clustering max_power_1(const CMat &h)
{
    Clustering out;
    out.centers.push_back(cluster_center(h, 0));
    out.clusters = ClusterSet::single(h.cols());
    return out;
}

Clustering max_power_k(const CMat &h, Index k, const ArrayGeometry &geometry)
{
    if (k < 1 || k > std::min(h.rows(), h.cols()))
        throw Error(ErrorKind::k_out_of_range, "k = " + std::to_string(k) + " for a " + std::to_string(h.rows()) +
                                                   "x" + std::to_string(h.cols()) + " channel");
    if (h.isZero(0.0))
        throw Error(ErrorKind::degenerate_cluster, "channel is zero");
    if (k == 1)
        return max_power_1(h);

    const CMat u = top_left_singular_vectors(h, k);
    Clustering out;
    for (Index c = 0; c < k; ++c)
        out.centers.push_back({c, fix_global_phase(u.col(c))});

    std::vector<Index> assignment(static_cast<std::size_t>(h.cols()));
    for (Index j = 0; j < h.cols(); ++j)
        assignment[static_cast<std::size_t>(j)] = assign_user(user_direction(h.col(j)), out.centers, geometry);
    out.clusters = ClusterSet::from_assignment(std::move(assignment), k);
    return out;
}

Index assign_user(const CVec &u, std::span<const ClusterCenter> centers, const ArrayGeometry &geometry)
{
    if (centers.empty())
        throw Error(ErrorKind::invalid_argument, "no centers to assign to");
    Index best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < centers.size(); ++c)
    {
        const double dist = user_distance_pc(u, centers[c].vector, geometry);
        if (dist < best_d)
        {
            best_d = dist;
            best = static_cast<Index>(c);
        }
    }
    return best;
}

} // namespace pchbf
