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
#include "pchbf/modulation.hpp"

#include "pchbf/error.hpp"

#include <cmath>
#include <string>

namespace pchbf
{

namespace
{

// Gray bit pair -> amplitude level
constexpr std::array<double, 4> gray_level{-3.0, -1.0, 3.0, 1.0};

const double qam_scale = 1.0 / std::sqrt(10.0);

int slice_axis(double x) noexcept
{
    const double t = 2.0 * qam_scale;
    if (x <= -t)
        return 0b00;
    if (x <= 0.0)
        return 0b01;
    if (x < t)
        return 0b11;
    return 0b10;
}

} // namespace

Qam16::Qam16()
{
    for (int label = 0; label < order; ++label)
        points_[static_cast<std::size_t>(label)] =
            cplx(gray_level[static_cast<std::size_t>(label >> 2)], gray_level[static_cast<std::size_t>(label & 3)]) *
            qam_scale;
}

cplx Qam16::point(int label) const
{
    if (label < 0 || label >= order)
        throw Error(ErrorKind::index_out_of_range, "QAM16 label " + std::to_string(label));
    return points_[static_cast<std::size_t>(label)];
}

CVec Qam16::modulate(std::span<const std::uint8_t> bits) const
{
    if (bits.size() % bits_per_symbol != 0)
        throw Error(ErrorKind::length_violation,
                    "bit count " + std::to_string(bits.size()) + " is not a multiple of 4");
    const auto n = static_cast<Index>(bits.size() / bits_per_symbol);
    CVec out(n);
    for (Index s = 0; s < n; ++s)
    {
        int label = 0;
        for (int b = 0; b < bits_per_symbol; ++b)
            label = (label << 1) | (bits[static_cast<std::size_t>(s * bits_per_symbol + b)] & 1);
        out(s) = points_[static_cast<std::size_t>(label)];
    }
    return out;
}

CVec Qam16::modulate_labels(std::span<const int> labels) const
{
    CVec out(static_cast<Index>(labels.size()));
    for (std::size_t s = 0; s < labels.size(); ++s)
        out(static_cast<Index>(s)) = point(labels[s]);
    return out;
}

int Qam16::demodulate_label(cplx symbol) const noexcept
{
    return (slice_axis(symbol.real()) << 2) | slice_axis(symbol.imag());
}

std::vector<std::uint8_t> Qam16::demodulate_hard(const CVec &symbols) const
{
    std::vector<std::uint8_t> bits;
    bits.reserve(static_cast<std::size_t>(symbols.size() * bits_per_symbol));
    for (Index s = 0; s < symbols.size(); ++s)
    {
        const int label = demodulate_label(symbols(s));
        for (int b = bits_per_symbol - 1; b >= 0; --b)
            bits.push_back(static_cast<std::uint8_t>((label >> b) & 1));
    }
    return bits;
}

} // namespace pchbf
