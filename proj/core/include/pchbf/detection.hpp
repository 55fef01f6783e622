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

namespace pchbf
{

// Noise variances below this floor are clamped inside the MMSE solve.
inline constexpr double min_noise_var = 1e-12;

// Linear MMSE filter W = (H^H H + (noise_var/signal_var) I)^{-1} H^H, U x B.
CMat mmse_filter(const CMat &h_eff, double noise_var, double signal_var = 1.0);

CVec mmse_detect(const CMat &h_eff, const CVec &y, double noise_var, double signal_var = 1.0);

// log2 det(I + H H^H / noise_var), bits/s/Hz.
double sum_rate(const CMat &h_eff, double noise_var);

} // namespace pchbf
