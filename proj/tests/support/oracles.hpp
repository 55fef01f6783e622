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

// Reference implementations used only by the tests. Each one is written with
// plain loops over std::complex so it shares no code with the library.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle
{

using cd = std::complex<double>;
using cvec = std::vector<cd>;
using rmat = std::vector<std::vector<double>>;

inline constexpr double pi = 3.14159265358979323846;

inline cd inner(const cvec &a, const cvec &b, std::size_t begin, std::size_t end)
{
    cd s{0.0, 0.0};
    for (std::size_t n = begin; n < end; ++n)
        s += std::conj(a[n]) * b[n];
    return s;
}

inline double distance_full(const cvec &a, const cvec &b)
{
    return 1.0 - std::abs(inner(a, b, 0, a.size()));
}

inline double distance_blocks(const cvec &a, const cvec &b, std::size_t n_blocks)
{
    const std::size_t len = a.size() / n_blocks;
    double s = 0.0;
    for (std::size_t m = 0; m < n_blocks; ++m)
        s += std::abs(inner(a, b, m * len, (m + 1) * len));
    return 1.0 - s;
}

// |a(t1)^H a(t2)| for a half-wavelength ULA, element-wise sum.
inline double ula_correlation_sum(int n, double spacing, double t1, double t2)
{
    cd s{0.0, 0.0};
    for (int k = 0; k < n; ++k)
    {
        const double p1 = 2.0 * pi * spacing * k * std::sin(t1);
        const double p2 = 2.0 * pi * spacing * k * std::sin(t2);
        s += std::polar(1.0, p2 - p1);
    }
    return std::abs(s) / n;
}

// Dirichlet kernel |sin(n*pi*delta) / (n*sin(pi*delta))| with delta = spacing*(sin t2 - sin t1).
inline double ula_correlation_dirichlet(int n, double spacing, double t1, double t2)
{
    const double delta = spacing * (std::sin(t2) - std::sin(t1));
    const double den = n * std::sin(pi * delta);
    if (std::abs(den) < 1e-300)
        return 1.0;
    return std::abs(std::sin(n * pi * delta) / den);
}

inline rmat random_distance_matrix(std::size_t n, std::mt19937_64 &rng)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    rmat d(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            d[i][j] = d[j][i] = u(rng);
    return d;
}

// Complete linkage by full rescan: every step recomputes the maximum
// cross-pair distance for every pair of live clusters from the raw matrix.
// Ties go to the pair whose (smallest member, smallest member) is
// lexicographically smallest. Clusters are returned sorted by smallest member.
inline std::vector<std::vector<std::size_t>> complete_linkage(const rmat &d, std::size_t k)
{
    std::vector<std::vector<std::size_t>> clusters;
    for (std::size_t i = 0; i < d.size(); ++i)
        clusters.push_back({i});
    while (clusters.size() > k)
    {
        std::sort(clusters.begin(), clusters.end(),
                  [](const auto &a, const auto &b) { return a.front() < b.front(); });
        double best = std::numeric_limits<double>::infinity();
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < clusters.size(); ++i)
            for (std::size_t j = i + 1; j < clusters.size(); ++j)
            {
                double link = 0.0;
                for (auto a : clusters[i])
                    for (auto b : clusters[j])
                        link = std::max(link, d[a][b]);
                if (link < best)
                {
                    best = link;
                    bi = i;
                    bj = j;
                }
            }
        clusters[bi].insert(clusters[bi].end(), clusters[bj].begin(), clusters[bj].end());
        std::sort(clusters[bi].begin(), clusters[bi].end());
        clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(bj));
    }
    std::sort(clusters.begin(), clusters.end(), [](const auto &a, const auto &b) { return a.front() < b.front(); });
    return clusters;
}

// Partition as a set of sets, so labels do not matter.
inline std::set<std::set<std::size_t>> as_partition(const std::vector<std::vector<std::size_t>> &clusters)
{
    std::set<std::set<std::size_t>> out;
    for (const auto &c : clusters)
        out.insert(std::set<std::size_t>(c.begin(), c.end()));
    return out;
}

// Gray 16-QAM by table: per axis 00 -> -3, 01 -> -1, 11 -> +1, 10 -> +3.
inline cd qam16_point(int label)
{
    static const double level[4] = {-3.0, -1.0, 3.0, 1.0}; // indexed by the 2-bit value
    const int i_bits = (label >> 2) & 3;
    const int q_bits = label & 3;
    return cd(level[i_bits], level[q_bits]) / std::sqrt(10.0);
}

// 16-way nearest-neighbour scan; first strictly smaller distance wins.
inline int qam16_nearest(cd z)
{
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (int l = 0; l < 16; ++l)
    {
        const double dist = std::norm(z - qam16_point(l));
        if (dist < best_d)
        {
            best_d = dist;
            best = l;
        }
    }
    return best;
}

// Largest eigenvalue of a Hermitian matrix by cyclic Jacobi rotations.
inline std::vector<double> hermitian_eigenvalues(std::vector<std::vector<cd>> a)
{
    const std::size_t n = a.size();
    for (int sweep = 0; sweep < 100; ++sweep)
    {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                off += std::norm(a[p][q]);
        if (off < 1e-30)
            break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
            {
                const double mag = std::abs(a[p][q]);
                if (mag < 1e-300)
                    continue;
                const cd phase = a[p][q] / mag;
                const double app = a[p][p].real();
                const double aqq = a[q][q].real();
                const double theta = 0.5 * std::atan2(2.0 * mag, aqq - app);
                const double c = std::cos(theta);
                const double s = std::sin(theta);
                // Columns p, q of the unitary J; J^H A J zeroes a[p][q].
                const cd jpp = c, jqp = -s * std::conj(phase), jpq = s * phase, jqq = c;
                for (std::size_t r = 0; r < n; ++r)
                {
                    const cd arp = a[r][p];
                    const cd arq = a[r][q];
                    a[r][p] = arp * jpp + arq * jqp;
                    a[r][q] = arp * jpq + arq * jqq;
                }
                for (std::size_t r = 0; r < n; ++r)
                {
                    const cd apr = a[p][r];
                    const cd aqr = a[q][r];
                    a[p][r] = std::conj(jpp) * apr + std::conj(jqp) * aqr;
                    a[q][r] = std::conj(jpq) * apr + std::conj(jqq) * aqr;
                }
            }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i)
        ev[i] = a[i][i].real();
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

} // namespace oracle
