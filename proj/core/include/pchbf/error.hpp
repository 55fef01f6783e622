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

#include <stdexcept>
#include <string>
#include <string_view>

namespace pchbf
{

enum class ErrorKind
{
    invalid_angle,
    invalid_geometry,
    dimension_mismatch,
    index_out_of_range,
    non_unit_norm,
    k_out_of_range,
    degenerate_cluster,
    empty_cluster,
    length_violation,
    invalid_argument,
    parse_error,
    invariant_violation,
    io_error,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All library failures are reported as pchbf::Error. The kind is stable and
// machine-checkable; what() carries "<kind>: <detail>".
class Error : public std::runtime_error
{
  public:
    Error(ErrorKind kind, const std::string &detail);

    ErrorKind kind() const noexcept { return kind_; }
    const std::string &detail() const noexcept { return detail_; }

  private:
    ErrorKind kind_;
    std::string detail_;
};

} // namespace pchbf
