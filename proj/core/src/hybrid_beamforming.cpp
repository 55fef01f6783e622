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
#include "pchbf/hybrid_beamforming.hpp"

#include "pchbf/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace pchbf
{

AnalogBeamformer::AnalogBeamformer(RMat phases, ArrayGeometry geometry)
    : phases_(std::move(phases)), geometry_(std::move(geometry))
{
    if (phases_.rows() != geometry_.n_subarrays() || phases_.cols() != geometry_.subarray_size())
        throw Error(ErrorKind::dimension_mismatch,
                    fmt::format("phase table is {}x{}, geometry needs {}x{}", phases_.rows(), phases_.cols(),
                                geometry_.n_subarrays(), geometry_.subarray_size()));
    if (!phases_.allFinite())
        throw Error(ErrorKind::invalid_argument, "phase table contains NaN or Inf");
    phases_ = phases_.unaryExpr([](double p) { return wrap_phase(p); });
}

namespace
{

double entry_phase(cplx z)
{
    if (z == cplx(0.0, 0.0))
        return 0.0;
    return wrap_phase(std::arg(z));
}

void fill_block_phases(RMat &phases, Index m, const CVec &source, const ArrayGeometry &geometry)
{
    const Index L = geometry.subarray_size();
    const Index offset = m * L;
    for (Index l = 0; l < L; ++l)
        phases(m, l) = entry_phase(source(offset + l));
}

} // namespace

AnalogBeamformer phases_from_center(const CVec &center, const ArrayGeometry &geometry)
{
    if (center.size() != geometry.n_rx())
        throw Error(ErrorKind::dimension_mismatch,
                    fmt::format("center length {} != n_rx {}", center.size(), geometry.n_rx()));
    RMat phases(geometry.n_subarrays(), geometry.subarray_size());
    for (Index m = 0; m < geometry.n_subarrays(); ++m)
        fill_block_phases(phases, m, center, geometry);
    return AnalogBeamformer(std::move(phases), geometry);
}

AnalogBeamformer phases_from_center(const ClusterCenter &center, const ArrayGeometry &geometry)
{
    return phases_from_center(center.vector, geometry);
}

AnalogBeamformer phases_multi_center(std::span<const CVec> cluster_users, const ArrayGeometry &geometry)
{
    if (cluster_users.empty())
        throw Error(ErrorKind::empty_cluster, "multi-center phases need at least one user");
    for (const auto &u : cluster_users)
        if (u.size() != geometry.n_rx())
            throw Error(ErrorKind::dimension_mismatch,
                        fmt::format("user vector length {} != n_rx {}", u.size(), geometry.n_rx()));

    const auto n_users = static_cast<Index>(cluster_users.size());
    RMat phases(geometry.n_subarrays(), geometry.subarray_size());
    for (Index m = 0; m < geometry.n_subarrays(); ++m)
        fill_block_phases(phases, m, cluster_users[static_cast<std::size_t>(m % n_users)], geometry);
    return AnalogBeamformer(std::move(phases), geometry);
}

CMat build_fa(const AnalogBeamformer &bf, FaScaling scaling)
{
    const auto &g = bf.geometry();
    const Index L = g.subarray_size();
    const double amp = scaling == FaScaling::normalized ? 1.0 / std::sqrt(static_cast<double>(L)) : 1.0;
    CMat fa = CMat::Zero(g.n_subarrays(), g.n_rx());
    for (Index m = 0; m < g.n_subarrays(); ++m)
        for (Index l = 0; l < L; ++l)
            fa(m, m * L + l) = std::polar(amp, -bf.phases()(m, l));
    return fa;
}

AnalogBeamformer fully_digital_beamformer(Index n_rx)
{
    return AnalogBeamformer(RMat::Zero(n_rx, 1), ArrayGeometry::linear(n_rx, n_rx));
}

CMat effective_channel(const CMat &fa, const CMat &h)
{
    if (fa.cols() != h.rows())
        throw Error(ErrorKind::dimension_mismatch,
                    fmt::format("combiner has {} columns, channel has {} rows", fa.cols(), h.rows()));
    return fa * h;
}

std::string_view to_string(SelectorKind kind) noexcept
{
    switch (kind)
    {
    case SelectorKind::fft_subset:
        return "fft";
    case SelectorKind::svd_bound:
        return "svd";
    case SelectorKind::identity:
        return "identity";
    }
    return "unknown";
}

SelectorKind selector_kind_from_string(std::string_view name)
{
    if (name == "fft" || name == "fft-subset")
        return SelectorKind::fft_subset;
    if (name == "svd" || name == "svd-bound")
        return SelectorKind::svd_bound;
    if (name == "identity")
        return SelectorKind::identity;
    throw Error(ErrorKind::invalid_argument, fmt::format("unknown beamspace selector '{}'", name));
}

CMat dft_matrix(Index m)
{
    if (m <= 0)
        throw Error(ErrorKind::invalid_argument, "DFT size must be positive");
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    CMat f(m, m);
    for (Index k = 0; k < m; ++k)
        for (Index n = 0; n < m; ++n)
        {
            // reduce k*n mod m first so the angle stays small and exact for large m
            const auto kn = static_cast<double>((k * n) % m);
            f(k, n) = std::polar(scale, -two_pi * kn / static_cast<double>(m));
        }
    return f;
}

RVec beam_energies(const CMat &eff)
{
    return (dft_matrix(eff.rows()) * eff).rowwise().squaredNorm();
}

namespace
{

void require_beam_count(Index n_beam, Index m)
{
    if (n_beam < 1 || n_beam > m)
        throw Error(ErrorKind::k_out_of_range, fmt::format("n_beam = {} must lie in [1, {}]", n_beam, m));
}

} // namespace

BeamspaceSelector fft_beamspace(const CMat &eff, Index n_beam)
{
    const Index m = eff.rows();
    require_beam_count(n_beam, m);

    const CMat dft = dft_matrix(m);
    const RVec energy = (dft * eff).rowwise().squaredNorm();

    std::vector<Index> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return energy(a) > energy(b); });
    order.resize(static_cast<std::size_t>(n_beam));
    std::sort(order.begin(), order.end());

    BeamspaceSelector out;
    out.kind = SelectorKind::fft_subset;
    out.matrix.resize(n_beam, m);
    for (Index r = 0; r < n_beam; ++r)
        out.matrix.row(r) = dft.row(order[static_cast<std::size_t>(r)]);
    out.selected_beams = std::move(order);
    return out;
}

BeamspaceSelector svd_beamspace(const CMat &eff, Index n_beam)
{
    require_beam_count(n_beam, eff.rows());
    BeamspaceSelector out;
    out.kind = SelectorKind::svd_bound;
    out.matrix = top_left_singular_vectors(eff, n_beam).adjoint();
    return out;
}

BeamspaceSelector identity_beamspace(Index m)
{
    BeamspaceSelector out;
    out.kind = SelectorKind::identity;
    out.matrix = CMat::Identity(m, m);
    return out;
}

BeamspaceSelector select_beamspace(SelectorKind kind, const CMat &eff, Index n_beam)
{
    switch (kind)
    {
    case SelectorKind::fft_subset:
        return fft_beamspace(eff, n_beam);
    case SelectorKind::svd_bound:
        return svd_beamspace(eff, n_beam);
    case SelectorKind::identity:
        return identity_beamspace(eff.rows());
    }
    throw Error(ErrorKind::invalid_argument, "unknown selector kind");
}

double captured_energy(const BeamspaceSelector &selector, const CMat &eff)
{
    if (selector.matrix.cols() != eff.rows())
        throw Error(ErrorKind::dimension_mismatch, "selector width != effective channel rows");
    return (selector.matrix * eff).squaredNorm();
}

std::string phase_table_csv(const AnalogBeamformer &bf)
{
    const RMat &p = bf.phases();
    std::string out = "subarray";
    for (Index l = 0; l < p.cols(); ++l)
        out += fmt::format(",shifter_{}", l);
    out += '\n';
    for (Index m = 0; m < p.rows(); ++m)
    {
        out += fmt::format("{}", m);
        for (Index l = 0; l < p.cols(); ++l)
            out += fmt::format(",{:.12g}", p(m, l));
        out += '\n';
    }
    return out;
}

} // namespace pchbf
