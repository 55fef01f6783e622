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

#include "pchbf/linalg.hpp"
#include "pchbf/random.hpp"

#include <vector>

namespace pchbf
{

enum class ArrayLayout
{
    uniform_linear,
    uniform_planar,
};

// Receive panel and its partition into equal, contiguous subarrays.
//
// Antennas are indexed row-major for planar panels; subarray m owns the
// antenna block [m*L, (m+1)*L) with L = n_rx / n_subarrays. Element positions
// are in wavelengths: column index along the horizontal axis, row index along
// the vertical axis.
class ArrayGeometry
{
  public:
    static ArrayGeometry linear(Index n_rx, Index n_subarrays, double spacing = 0.5);
    static ArrayGeometry planar(Index rows, Index cols, Index n_subarrays, double spacing_h = 0.5,
                                double spacing_v = 0.5);

    Index n_rx() const noexcept { return n_rx_; }
    Index n_subarrays() const noexcept { return n_subarrays_; }
    Index subarray_size() const noexcept { return n_rx_ / n_subarrays_; }
    ArrayLayout layout() const noexcept { return layout_; }
    Index rows() const noexcept { return rows_; }
    Index cols() const noexcept { return cols_; }
    double spacing_h() const noexcept { return spacing_h_; }
    double spacing_v() const noexcept { return spacing_v_; }

    // First antenna index of subarray m.
    Index subarray_offset(Index m) const;

    bool operator==(const ArrayGeometry &) const = default;

  private:
    ArrayGeometry(ArrayLayout layout, Index rows, Index cols, Index n_subarrays, double spacing_h,
                  double spacing_v);

    ArrayLayout layout_;
    Index rows_;
    Index cols_;
    Index n_rx_;
    Index n_subarrays_;
    double spacing_h_;
    double spacing_v_;
};

struct PathComponent
{
    double azimuth = 0.0;   // radians, [-pi/2, pi/2]
    double elevation = 0.0; // radians, zero for linear panels
    cplx gain{1.0, 0.0};
};

struct UserChannel
{
    Index user_id = 0;
    CVec vector;
    std::vector<PathComponent> paths;
};

class ChannelMatrix
{
  public:
    ChannelMatrix(CMat entries, ArrayGeometry geometry);

    const CMat &entries() const noexcept { return entries_; }
    const ArrayGeometry &geometry() const noexcept { return geometry_; }
    Index n_rx() const noexcept { return entries_.rows(); }
    Index n_tx() const noexcept { return entries_.cols(); }
    CVec column(Index j) const { return entries_.col(j); }

    // Columns for the given users, in the given order.
    CMat columns(const std::vector<Index> &users) const;

  private:
    CMat entries_;
    ArrayGeometry geometry_;
};

struct ChannelParams
{
    Index n_scatter_paths = 4;
    double rician_k_db = 10.0;  // LOS-to-scatter power ratio
    double angular_spread = 0.0; // radians, scatter offsets drawn from [-spread, spread]
    double los_azimuth = 0.0;
    double los_elevation = 0.0;
};

// Users are placed round-robin into angular groups (user i joins group
// i mod n_groups); each user's LOS azimuth is the group center plus a uniform
// offset in [-group_spread, group_spread].
struct DropLayout
{
    Index n_users = 12;
    std::vector<double> group_centers; // azimuth, radians
    double group_spread = 0.0;         // radians
    double elevation = 0.0;            // common LOS elevation (planar only)
    Index n_scatter_paths = 4;
    double rician_k_db = 10.0;
    double angular_spread = 0.0;
};

// Unit-norm array response: entry n = exp(i*2*pi*<p_n, k>) / sqrt(n_rx), with
// <p_n, k> = x_n*cos(el)*sin(az) + z_n*sin(el).
CVec steering_vector(const ArrayGeometry &geometry, double azimuth, double elevation = 0.0);

// LOS path plus n_scatter_paths scattered paths around it, normalized to unit norm.
UserChannel generate_user_channel(const ArrayGeometry &geometry, Rng &rng, const ChannelParams &params,
                                  Index user_id = 0);

ChannelMatrix assemble_channel(const std::vector<UserChannel> &users, const ArrayGeometry &geometry);

ChannelMatrix generate_drop(const ArrayGeometry &geometry, const DropLayout &layout, Rng &rng);

// Entries [m*L, (m+1)*L) of an n_rx-long vector.
CVec subarray_block(const CVec &vector, Index m, const ArrayGeometry &geometry);

} // namespace pchbf
