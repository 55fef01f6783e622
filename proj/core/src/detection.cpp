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
#include "pchbf/detection.hpp"

#include "pchbf/error.hpp"

#include <cmath>
#include <string>

namespace pchbf
{

CMat mmse_filter(const CMat &h_eff, double noise_var, double signal_var)
{
    if (h_eff.rows() < 1)
        throw Error(ErrorKind::dimension_mismatch, "MMSE needs at least one receive dimension");
    if (std::isnan(noise_var) || noise_var < 0.0)
        throw Error(ErrorKind::invalid_argument, "noise variance must be non-negative");
    if (!(signal_var > 0.0))
        throw Error(ErrorKind::invalid_argument, "signal variance must be positive");

    const double rho = std::max(noise_var, min_noise_var) / signal_var;
    CMat gram = h_eff.adjoint() * h_eff;
    gram.diagonal().array() += rho;
    return gram.ldlt().solve(h_eff.adjoint());
}

CVec mmse_detect(const CMat &h_eff, const CVec &y, double noise_var, double signal_var)
{
    if (y.size() != h_eff.rows())
        throw Error(ErrorKind::dimension_mismatch,
                    "y has " + std::to_string(y.size()) + " entries, channel has " + std::to_string(h_eff.rows()) +
                        " rows");
    return mmse_filter(h_eff, noise_var, signal_var) * y;
}

double sum_rate(const CMat &h_eff, double noise_var)
{
    if (!(noise_var > 0.0))
        throw Error(ErrorKind::invalid_argument, "sum rate needs a positive noise variance");
    if (h_eff.cols() == 0 || h_eff.rows() == 0)
        return 0.0;

    // Sylvester: det(I_B + H H^H / s) = det(I_U + H^H H / s)
    CMat gram = h_eff.adjoint() * h_eff / noise_var;
    gram.diagonal().array() += 1.0;
    const Eigen::LLT<CMat> llt(gram);
    double log_det = 0.0;
    for (Index i = 0; i < gram.rows(); ++i)
        log_det += 2.0 * std::log2(llt.matrixLLT()(i, i).real());
    return std::max(0.0, log_det);
}

} // namespace pchbf
