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
#include "pchbf/linalg.hpp"

#include "pchbf/error.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <string>

namespace pchbf
{

bool is_unit_norm(const CVec &v, double tol)
{
    return std::abs(v.norm() - 1.0) <= tol;
}

void require_unit_norm(const CVec &v, std::string_view what, double tol)
{
    if (!is_unit_norm(v, tol))
        throw Error(ErrorKind::non_unit_norm,
                    std::string(what) + " has norm " + std::to_string(v.norm()) + ", expected 1");
}

CVec fix_global_phase(CVec v)
{
    if (v.size() == 0)
        return v;
    Index best = 0;
    double best_mag = std::abs(v(0));
    for (Index i = 1; i < v.size(); ++i)
    {
        const double mag = std::abs(v(i));
        if (mag > best_mag)
        {
            best = i;
            best_mag = mag;
        }
    }
    if (best_mag == 0.0)
        return v;
    const cplx rot = std::conj(v(best)) / best_mag;
    v *= rot;
    v(best) = cplx(best_mag, 0.0);
    return v;
}

CMat top_left_singular_vectors(const CMat &a, Index count)
{
    if (count < 0 || count > a.rows())
        throw Error(ErrorKind::k_out_of_range,
                    "requested " + std::to_string(count) + " singular vectors of a matrix with " +
                        std::to_string(a.rows()) + " rows");
    const bool need_full = count > std::min(a.rows(), a.cols());
    Eigen::BDCSVD<CMat> svd(a, need_full ? Eigen::ComputeFullU : Eigen::ComputeThinU);
    return svd.matrixU().leftCols(count);
}

RVec singular_values(const CMat &a)
{
    return Eigen::BDCSVD<CMat>(a).singularValues();
}

double wrap_phase(double radians) noexcept
{
    double w = std::fmod(radians, two_pi);
    if (w < 0.0)
        w += two_pi;
    if (w >= two_pi)
        w = 0.0;
    return w;
}

} // namespace pchbf
