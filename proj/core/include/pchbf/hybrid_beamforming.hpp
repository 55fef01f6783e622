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
#include "pchbf/linalg.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pchbf
{

// Phase-shifter states of a partially-connected analog combiner: one row per
// subarray, one column per shifter, radians in [0, 2π).
class AnalogBeamformer
{
  public:
    AnalogBeamformer(RMat phases, ArrayGeometry geometry);

    const RMat &phases() const noexcept { return phases_; }
    const ArrayGeometry &geometry() const noexcept { return geometry_; }

  private:
    RMat phases_;
    ArrayGeometry geometry_;
};

// Every subarray steers with the phases of its own block of the center vector.
AnalogBeamformer phases_from_center(const CVec &center, const ArrayGeometry &geometry);
AnalogBeamformer phases_from_center(const ClusterCenter &center, const ArrayGeometry &geometry);

// Subarrays are dealt round-robin to the cluster's users (subarray m follows
// user m mod |cluster|) and steer with that user's block phases.
AnalogBeamformer phases_multi_center(std::span<const CVec> cluster_users, const ArrayGeometry &geometry);

enum class FaScaling
{
    normalized,   // modulus 1/sqrt(L): orthonormal rows, white noise preserved
    unit_modulus, // modulus 1
};

// Block-diagonal M x n_rx combiner; row m is supported on columns [mL, (m+1)L).
// Subarray m steers with f_m = exp(i*phases[m]) and combines with f_m^H, so
// entry (m, mL + l) is exp(-i*phases[m][l]) times the scaling.
CMat build_fa(const AnalogBeamformer &bf, FaScaling scaling = FaScaling::normalized);

// Combiner for a panel without phase shifters (one antenna per ADC).
AnalogBeamformer fully_digital_beamformer(Index n_rx);

CMat effective_channel(const CMat &fa, const CMat &h);

enum class SelectorKind
{
    fft_subset,
    svd_bound,
    identity,
};

std::string_view to_string(SelectorKind kind) noexcept;
SelectorKind selector_kind_from_string(std::string_view name);

struct BeamspaceSelector
{
    SelectorKind kind = SelectorKind::identity;
    CMat matrix;                      // n_beam x M, orthonormal rows
    std::vector<Index> selected_beams; // DFT rows, ascending (fft_subset only)

    Index n_beam() const noexcept { return matrix.rows(); }
};

// Unitary M-point DFT: entry (k, n) = exp(-i 2π k n / M) / sqrt(M).
CMat dft_matrix(Index m);

// Squared row norms of DFT * eff.
RVec beam_energies(const CMat &eff);

// Keeps the n_beam DFT beams carrying the most energy of eff.
BeamspaceSelector fft_beamspace(const CMat &eff, Index n_beam);

// Rows are the conjugated n_beam dominant left singular vectors of eff.
BeamspaceSelector svd_beamspace(const CMat &eff, Index n_beam);

BeamspaceSelector identity_beamspace(Index m);

BeamspaceSelector select_beamspace(SelectorKind kind, const CMat &eff, Index n_beam);

// ‖F_D eff‖_F^2
double captured_energy(const BeamspaceSelector &selector, const CMat &eff);

// CSV with one row per subarray: "subarray,shifter_0,...,shifter_{L-1}".
std::string phase_table_csv(const AnalogBeamformer &bf);

} // namespace pchbf
