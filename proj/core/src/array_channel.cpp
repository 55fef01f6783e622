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
#include "pchbf/array_channel.hpp"

#include "pchbf/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace pchbf
{

namespace
{

void require_front_half_space(double angle, const char *name)
{
    if (!std::isfinite(angle) || angle < -pi / 2.0 || angle > pi / 2.0)
        throw Error(ErrorKind::invalid_angle,
                    std::string(name) + " = " + std::to_string(angle) + " rad is outside [-pi/2, pi/2]");
}

double clamp_half_space(double angle)
{
    return std::clamp(angle, -pi / 2.0, pi / 2.0);
}

} // namespace

ArrayGeometry::ArrayGeometry(ArrayLayout layout, Index rows, Index cols, Index n_subarrays, double spacing_h,
                             double spacing_v)
    : layout_(layout), rows_(rows), cols_(cols), n_rx_(rows * cols), n_subarrays_(n_subarrays),
      spacing_h_(spacing_h), spacing_v_(spacing_v)
{
    if (rows <= 0 || cols <= 0)
        throw Error(ErrorKind::invalid_geometry, "panel dimensions must be positive");
    if (n_subarrays <= 0)
        throw Error(ErrorKind::invalid_geometry, "number of subarrays must be positive");
    if (n_rx_ % n_subarrays != 0)
        throw Error(ErrorKind::invalid_geometry, "n_rx = " + std::to_string(n_rx_) +
                                                     " is not divisible by n_subarrays = " +
                                                     std::to_string(n_subarrays) + " (L not integer)");
    if (!(spacing_h > 0.0) || !(spacing_v > 0.0) || !std::isfinite(spacing_h) || !std::isfinite(spacing_v))
        throw Error(ErrorKind::invalid_geometry, "element spacing must be positive and finite");
}

ArrayGeometry ArrayGeometry::linear(Index n_rx, Index n_subarrays, double spacing)
{
    return ArrayGeometry(ArrayLayout::uniform_linear, 1, n_rx, n_subarrays, spacing, spacing);
}

ArrayGeometry ArrayGeometry::planar(Index rows, Index cols, Index n_subarrays, double spacing_h, double spacing_v)
{
    return ArrayGeometry(ArrayLayout::uniform_planar, rows, cols, n_subarrays, spacing_h, spacing_v);
}

Index ArrayGeometry::subarray_offset(Index m) const
{
    if (m < 0 || m >= n_subarrays_)
        throw Error(ErrorKind::index_out_of_range,
                    "subarray " + std::to_string(m) + " of " + std::to_string(n_subarrays_));
    return m * subarray_size();
}

ChannelMatrix::ChannelMatrix(CMat entries, ArrayGeometry geometry)
    : entries_(std::move(entries)), geometry_(std::move(geometry))
{
    if (entries_.rows() != geometry_.n_rx())
        throw Error(ErrorKind::dimension_mismatch, "channel has " + std::to_string(entries_.rows()) +
                                                       " rows, geometry has " +
                                                       std::to_string(geometry_.n_rx()) + " antennas");
    if (!entries_.allFinite())
        throw Error(ErrorKind::invalid_argument, "channel matrix contains NaN or Inf");
}

CMat ChannelMatrix::columns(const std::vector<Index> &users) const
{
    CMat out(n_rx(), static_cast<Index>(users.size()));
    for (std::size_t j = 0; j < users.size(); ++j)
    {
        if (users[j] < 0 || users[j] >= n_tx())
            throw Error(ErrorKind::index_out_of_range, "user " + std::to_string(users[j]));
        out.col(static_cast<Index>(j)) = entries_.col(users[j]);
    }
    return out;
}

CVec steering_vector(const ArrayGeometry &geometry, double azimuth, double elevation)
{
    require_front_half_space(azimuth, "azimuth");
    require_front_half_space(elevation, "elevation");

    const double kx = std::cos(elevation) * std::sin(azimuth);
    const double kz = std::sin(elevation);
    const double scale = 1.0 / std::sqrt(static_cast<double>(geometry.n_rx()));

    CVec a(geometry.n_rx());
    for (Index r = 0; r < geometry.rows(); ++r)
    {
        for (Index c = 0; c < geometry.cols(); ++c)
        {
            const double proj = static_cast<double>(c) * geometry.spacing_h() * kx +
                                static_cast<double>(r) * geometry.spacing_v() * kz;
            a(r * geometry.cols() + c) = scale * std::polar(1.0, two_pi * proj);
        }
    }
    return a;
}

UserChannel generate_user_channel(const ArrayGeometry &geometry, Rng &rng, const ChannelParams &params,
                                  Index user_id)
{
    if (params.n_scatter_paths < 0)
        throw Error(ErrorKind::invalid_argument, "n_scatter_paths must be non-negative");
    if (!(params.angular_spread >= 0.0))
        throw Error(ErrorKind::invalid_argument, "angular_spread must be non-negative");
    if (std::isnan(params.rician_k_db))
        throw Error(ErrorKind::invalid_argument, "rician_k_db is NaN");

    const bool planar = geometry.layout() == ArrayLayout::uniform_planar;
    const double los_el = planar ? params.los_elevation : 0.0;
    require_front_half_space(params.los_azimuth, "los_azimuth");
    require_front_half_space(los_el, "los_elevation");

    const double k_lin = std::pow(10.0, params.rician_k_db / 10.0);
    const bool has_scatter = params.n_scatter_paths > 0 && std::isfinite(k_lin);
    const double los_power = has_scatter ? k_lin / (k_lin + 1.0) : 1.0;
    const double scatter_power = has_scatter ? 1.0 / (k_lin + 1.0) : 0.0;

    std::uniform_real_distribution<double> phase(0.0, two_pi);
    std::uniform_real_distribution<double> offset(-params.angular_spread, params.angular_spread);

    UserChannel out;
    out.user_id = user_id;
    out.paths.push_back({params.los_azimuth, los_el, std::polar(std::sqrt(los_power), phase(rng))});

    if (has_scatter)
    {
        double drawn = 0.0;
        for (Index p = 0; p < params.n_scatter_paths; ++p)
        {
            PathComponent path;
            path.gain = complex_normal(rng);
            path.azimuth = clamp_half_space(params.los_azimuth + offset(rng));
            path.elevation = planar ? clamp_half_space(los_el + offset(rng)) : 0.0;
            drawn += std::norm(path.gain);
            out.paths.push_back(path);
        }
        // Pin the LOS/scatter power ratio exactly to the K-factor.
        const double rescale = drawn > 0.0 ? std::sqrt(scatter_power / drawn) : 0.0;
        for (std::size_t p = 1; p < out.paths.size(); ++p)
            out.paths[p].gain *= rescale;
    }

    out.vector = CVec::Zero(geometry.n_rx());
    for (const auto &path : out.paths)
        out.vector += path.gain * steering_vector(geometry, path.azimuth, path.elevation);

    const double norm = out.vector.norm();
    if (!(norm > 0.0) || !std::isfinite(norm))
        throw Error(ErrorKind::invalid_argument, "generated channel vanished (paths cancelled exactly)");
    out.vector /= norm;
    for (auto &path : out.paths)
        path.gain /= norm;
    return out;
}

ChannelMatrix assemble_channel(const std::vector<UserChannel> &users, const ArrayGeometry &geometry)
{
    if (users.empty())
        throw Error(ErrorKind::dimension_mismatch, "cannot assemble a channel from zero users");
    CMat h(geometry.n_rx(), static_cast<Index>(users.size()));
    for (std::size_t j = 0; j < users.size(); ++j)
    {
        if (users[j].vector.size() != geometry.n_rx())
            throw Error(ErrorKind::dimension_mismatch, "user " + std::to_string(j) + " vector has length " +
                                                           std::to_string(users[j].vector.size()) +
                                                           ", expected " + std::to_string(geometry.n_rx()));
        h.col(static_cast<Index>(j)) = users[j].vector;
    }
    return ChannelMatrix(std::move(h), geometry);
}

ChannelMatrix generate_drop(const ArrayGeometry &geometry, const DropLayout &layout, Rng &rng)
{
    if (layout.n_users <= 0)
        throw Error(ErrorKind::invalid_argument, "drop needs at least one user");
    if (layout.group_centers.empty())
        throw Error(ErrorKind::invalid_argument, "drop needs at least one angular group");

    std::uniform_real_distribution<double> jitter(-layout.group_spread, layout.group_spread);
    const auto n_groups = static_cast<Index>(layout.group_centers.size());

    std::vector<UserChannel> users;
    users.reserve(static_cast<std::size_t>(layout.n_users));
    for (Index i = 0; i < layout.n_users; ++i)
    {
        ChannelParams params;
        params.n_scatter_paths = layout.n_scatter_paths;
        params.rician_k_db = layout.rician_k_db;
        params.angular_spread = layout.angular_spread;
        params.los_azimuth = clamp_half_space(layout.group_centers[static_cast<std::size_t>(i % n_groups)] + jitter(rng));
        params.los_elevation = layout.elevation;
        users.push_back(generate_user_channel(geometry, rng, params, i));
    }
    return assemble_channel(users, geometry);
}

CVec subarray_block(const CVec &vector, Index m, const ArrayGeometry &geometry)
{
    if (vector.size() != geometry.n_rx())
        throw Error(ErrorKind::dimension_mismatch, "vector length " + std::to_string(vector.size()) +
                                                       " != n_rx " + std::to_string(geometry.n_rx()));
    const Index offset = geometry.subarray_offset(m);
    return vector.segment(offset, geometry.subarray_size());
}

} // namespace pchbf
