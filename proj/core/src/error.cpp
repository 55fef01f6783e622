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

#include "pchbf/error.hpp"

namespace pchbf
{

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind)
    {
    case ErrorKind::invalid_angle:
        return "invalid-angle";
    case ErrorKind::invalid_geometry:
        return "invalid-geometry";
    case ErrorKind::dimension_mismatch:
        return "dimension-mismatch";
    case ErrorKind::index_out_of_range:
        return "index-out-of-range";
    case ErrorKind::non_unit_norm:
        return "non-unit-norm";
    case ErrorKind::k_out_of_range:
        return "k-out-of-range";
    case ErrorKind::degenerate_cluster:
        return "degenerate-cluster";
    case ErrorKind::empty_cluster:
        return "empty-cluster";
    case ErrorKind::length_violation:
        return "length-violation";
    case ErrorKind::invalid_argument:
        return "invalid-argument";
    case ErrorKind::parse_error:
        return "parse-error";
    case ErrorKind::invariant_violation:
        return "invariant-violation";
    case ErrorKind::io_error:
        return "io-error";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string &detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail)
{
}

} // namespace pchbf
