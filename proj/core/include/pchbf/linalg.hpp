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

#include <Eigen/Dense>

#include <complex>
#include <string_view>

namespace pchbf
{

using cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;
using Index = Eigen::Index;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

// Default tolerance for "this vector is unit norm" preconditions.
inline constexpr double unit_norm_tolerance = 1e-6;

bool is_unit_norm(const CVec &v, double tol = unit_norm_tolerance);

// Throws Error{non_unit_norm} naming `what` if |‖v‖ - 1| > tol.
void require_unit_norm(const CVec &v, std::string_view what, double tol = unit_norm_tolerance);

// Removes the global phase ambiguity: the largest-magnitude entry (first one on
// ties) is rotated onto the non-negative real axis.
CVec fix_global_phase(CVec v);

// Left singular vectors for the `count` largest singular values, as columns,
// in descending singular-value order. count may exceed the rank (up to rows);
// the extra columns complete an orthonormal basis.
CMat top_left_singular_vectors(const CMat &a, Index count);

RVec singular_values(const CMat &a);

// Angle wrapped into [0, 2π).
double wrap_phase(double radians) noexcept;

} // namespace pchbf
