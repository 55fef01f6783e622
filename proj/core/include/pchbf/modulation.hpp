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

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace pchbf
{

// Gray-labeled square 16-QAM with unit average energy.
//
// A 4-bit label b0 b1 b2 b3 (b0 most significant) maps b0 b1 to the in-phase
// level and b2 b3 to the quadrature level, each via 00 -> -3, 01 -> -1,
// 11 -> +1, 10 -> +3, scaled by 1/sqrt(10).
class Qam16
{
  public:
    static constexpr int bits_per_symbol = 4;
    static constexpr int order = 16;

    Qam16();

    const std::array<cplx, order> &constellation() const noexcept { return points_; }
    cplx point(int label) const;

    CVec modulate(std::span<const std::uint8_t> bits) const;
    CVec modulate_labels(std::span<const int> labels) const;

    // Nearest constellation point; equidistant candidates resolve to the lower label.
    std::vector<std::uint8_t> demodulate_hard(const CVec &symbols) const;
    int demodulate_label(cplx symbol) const noexcept;

  private:
    std::array<cplx, order> points_;
};

} // namespace pchbf
