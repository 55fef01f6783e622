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

// Acceptance checks. One PASS/FAIL line per criterion; exit status is the
// number of failed criteria.

#include <pchbf/clustering.hpp>
#include <pchbf/config.hpp>
#include <pchbf/detection.hpp>
#include <pchbf/hybrid_beamforming.hpp>
#include <pchbf/link_simulator.hpp>

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>

using namespace pchbf;

namespace
{

struct Outcome
{
    bool pass = false;
    std::string detail;
};

CVec random_unit(Index n, Rng &rng)
{
    CVec v(n);
    for (Index i = 0; i < n; ++i)
        v(i) = complex_normal(rng);
    return v / v.norm();
}

std::string fmt_double(const char *spec, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

// Shared by criteria 1 and 8.
struct DeskSweep
{
    std::string csv;
    SweepReport report;
    double seconds = 0.0;
};

DeskSweep run_desk_sweep(unsigned workers)
{
    auto config = desk_preset();
    auto settings = make_sweep_settings(config);
    settings.workers = workers;
    const auto t0 = std::chrono::steady_clock::now();
    DeskSweep out;
    out.report = monte_carlo(make_scenario(config), settings);
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.csv = sweep_csv(out.report);
    return out;
}

// a <= b resolved at 95%: the whole interval of a lies below the interval of b.
bool resolved_below(const SweepRow &a, const SweepRow &b)
{
    return a.ser <= b.ser && a.wilson_hi < b.wilson_lo;
}

Outcome ordering(const DeskSweep &sweep)
{
    const auto config = desk_preset();
    using A = Algorithm;
    const std::pair<A, A> pairs[] = {{A::fully_digital, A::hc_pc},
                                     {A::hc_pc, A::hc_pc_mc},
                                     {A::hc_pc, A::hc_full},
                                     {A::hc_pc, A::maxpower_1}};
    Outcome out{true, {}};
    int points = 0;
    for (double snr : config.snr_db)
    {
        const auto &fd = sweep.report.row(A::fully_digital, snr);
        if (fd.ser < 1e-3 || fd.ser > 1e-1)
            continue;
        ++points;
        out.detail += fmt_double(" @%gdB:", snr);
        for (const auto &[lo, hi] : pairs)
        {
            const auto &a = sweep.report.row(lo, snr);
            const auto &b = sweep.report.row(hi, snr);
            const bool ok = resolved_below(a, b);
            out.pass = out.pass && ok;
            out.detail += std::string(" ") + std::string(to_string(lo)) + fmt_double("=%.4g", a.ser) +
                          (ok ? "<" : "!<") + std::string(to_string(hi)) + fmt_double("=%.4g", b.ser);
        }
    }
    if (points == 0)
    {
        out.pass = false;
        out.detail = " no SNR point with fully-digital SER in [1e-3, 1e-1]";
    }
    out.detail = std::to_string(sweep.report.n_trials) + " paired trials, " + std::to_string(points) +
                 " qualifying SNR points," + out.detail + fmt_double(" (%.1f s)", sweep.seconds);
    return out;
}

Outcome clustering_oracle()
{
    std::mt19937_64 rng(2024);
    int mismatches = 0, cases = 0;
    for (int trial = 0; trial < 100; ++trial)
    {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 7);
        const auto raw = oracle::random_distance_matrix(n, rng);
        DistanceMatrix d;
        d.values.resize(static_cast<Index>(n), static_cast<Index>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d.values(static_cast<Index>(i), static_cast<Index>(j)) = raw[i][j];
        for (std::size_t k = 1; k <= n; ++k)
        {
            ++cases;
            const auto got = hierarchical_cluster(d, static_cast<Index>(k));
            std::vector<std::vector<std::size_t>> as_std;
            for (const auto &c : got.clusters)
                as_std.emplace_back(c.begin(), c.end());
            if (oracle::as_partition(as_std) != oracle::as_partition(oracle::complete_linkage(raw, k)))
                ++mismatches;
        }
    }
    return {mismatches == 0, "100 matrices, 2..8 users, " + std::to_string(cases) + " (matrix, K) cases, " +
                                 std::to_string(mismatches) + " mismatches"};
}

Outcome phase_alignment()
{
    Rng rng(31);
    std::uniform_real_distribution<double> angle(0.0, two_pi);
    const auto g = ArrayGeometry::linear(8, 1);
    double worst_gap = 0.0;
    double min_margin = 1e300;
    bool strict = true;
    for (int b = 0; b < 100; ++b)
    {
        const CVec u = random_unit(8, rng);
        const CMat f = build_fa(phases_from_center(u, g), FaScaling::unit_modulus);
        const double gain = std::abs((f * u)(0));
        worst_gap = std::max(worst_gap, std::abs(gain - u.cwiseAbs().sum()));
        for (int p = 0; p < 10000; ++p)
        {
            CVec probe(8);
            for (Index l = 0; l < 8; ++l)
                probe(l) = std::polar(1.0, angle(rng));
            const double other = std::abs(probe.dot(u));
            strict = strict && gain > other;
            min_margin = std::min(min_margin, gain - other);
        }
    }
    return {worst_gap <= 1e-10 && strict,
            "100 blocks x 1e4 probes, max |gain - sum|u_l|| = " + fmt_double("%.2e", worst_gap) +
                ", min margin over probes = " + fmt_double("%.3e", min_margin)};
}

Outcome beamspace_dominance()
{
    Rng rng(41);
    int energy_ok = 0, rate_ok = 0, rate_cases = 0, cases = 0;
    for (int t = 0; t < 100; ++t)
    {
        CMat eff(8, 4);
        for (Index j = 0; j < 4; ++j)
            for (Index i = 0; i < 8; ++i)
                eff(i, j) = complex_normal(rng);
        const Index n_beam = 2 + t % 3;
        const auto svd = svd_beamspace(eff, n_beam);
        const auto fft = fft_beamspace(eff, n_beam);
        ++cases;
        if (captured_energy(svd, eff) >= captured_energy(fft, eff))
            ++energy_ok;
        for (double snr : {-5.0, 0.0, 5.0, 10.0, 15.0, 20.0, 25.0})
        {
            ++rate_cases;
            const double nv = noise_variance(snr);
            if (sum_rate(svd.matrix * eff, nv) >= sum_rate(fft.matrix * eff, nv))
                ++rate_ok;
        }
    }
    return {energy_ok == cases && rate_ok == rate_cases,
            "energy " + std::to_string(energy_ok) + "/" + std::to_string(cases) + ", sum rate " +
                std::to_string(rate_ok) + "/" + std::to_string(rate_cases) + " (M=8, 4 users, n_beam 2..4)"};
}

Outcome fa_structure()
{
    Rng rng(51);
    std::uniform_real_distribution<double> angle(-20.0, 20.0);
    const ArrayGeometry shapes[] = {ArrayGeometry::linear(64, 8), ArrayGeometry::linear(16, 4),
                                    ArrayGeometry::planar(4, 8, 8), ArrayGeometry::linear(12, 3)};
    int bad = 0;
    double worst_modulus = 0.0, worst_ortho = 0.0;
    for (int t = 0; t < 1000; ++t)
    {
        const auto &g = shapes[t % 4];
        const Index M = g.n_subarrays(), L = g.subarray_size();
        RMat p(M, L);
        for (Index m = 0; m < M; ++m)
            for (Index l = 0; l < L; ++l)
                p(m, l) = angle(rng);
        const AnalogBeamformer bf(p, g);
        const CMat raw = build_fa(bf, FaScaling::unit_modulus);
        const CMat fa = build_fa(bf);
        Index nonzero = 0;
        for (Index m = 0; m < M; ++m)
            for (Index n = 0; n < g.n_rx(); ++n)
            {
                const bool on = n >= m * L && n < (m + 1) * L;
                const bool nz = raw(m, n) != cplx(0.0, 0.0);
                nonzero += nz ? 1 : 0;
                if (on != nz)
                    ++bad;
                if (on)
                    worst_modulus = std::max(worst_modulus, std::abs(std::abs(raw(m, n)) - 1.0));
            }
        if (nonzero != M * L)
            ++bad;
        worst_ortho = std::max(worst_ortho, (fa * fa.adjoint() - CMat::Identity(M, M)).cwiseAbs().maxCoeff());
    }
    return {bad == 0 && worst_modulus <= 1e-10 && worst_ortho <= 1e-10,
            "1000 beamformers, pattern violations " + std::to_string(bad) + ", max modulus error " +
                fmt_double("%.2e", worst_modulus) + ", max |F F^H - I| " + fmt_double("%.2e", worst_ortho)};
}

Outcome paper_arithmetic()
{
    const auto c = paper_preset();
    const auto r = complexity_report(c);
    const bool ok = c.n_rx == 1024 && c.subarray_size() == 16 && r.adc_count == 64 && r.digital_dim == 32 &&
                    c.n_beam == 32 && c.k == 8 && r.complexity_ratio == 16384.0;
    return {ok, "n_rx=" + std::to_string(c.n_rx) + " L=" + std::to_string(c.subarray_size()) +
                    " adc_count=" + std::to_string(r.adc_count) + " n_beam=" + std::to_string(r.digital_dim) +
                    " k=" + std::to_string(c.k) + fmt_double(" complexity_ratio=%.12g", r.complexity_ratio)};
}

Outcome canonical_separation()
{
    const auto g = ArrayGeometry::linear(4, 2);
    CVec ui(4), uj(4);
    ui << 0.5, 0.5, 0.5, 0.5;
    uj << 0.5, 0.5, -0.5, -0.5;
    const double full = user_distance_full(ui, uj);
    const double pc = user_distance_pc(ui, uj, g);
    return {std::abs(full - 1.0) <= 1e-12 && std::abs(pc) <= 1e-12,
            fmt_double("full-array %.15g", full) + fmt_double(", per-subarray %.15g", pc)};
}

Outcome determinism(const DeskSweep &first, unsigned first_workers)
{
    const unsigned other = first_workers == 1 ? 4 : 1;
    const auto second = run_desk_sweep(other);
    return {first.csv == second.csv, "workers " + std::to_string(first_workers) + " vs " + std::to_string(other) +
                                         ", " + std::to_string(first.csv.size()) + " CSV bytes, " +
                                         (first.csv == second.csv ? "identical" : "DIFFERENT")};
}

} // namespace

int main()
{
    int failed = 0;
    auto report = [&](int id, const char *name, const Outcome &o) {
        std::printf("criterion %d %s: %s | %s\n", id, o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    };

    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    const auto sweep = run_desk_sweep(workers);
    report(1, "algorithm ordering on the desk preset", ordering(sweep));
    report(2, "complete-linkage oracle equivalence", clustering_oracle());
    report(3, "phase-alignment optimality", phase_alignment());
    report(4, "SVD beamspace dominates FFT beamspace", beamspace_dominance());
    report(5, "analog combiner structure", fa_structure());
    report(6, "paper-scale preset arithmetic", paper_arithmetic());
    report(7, "full-array vs per-subarray distance separation", canonical_separation());
    report(8, "sweep determinism under different parallelism", determinism(sweep, workers));
    std::printf("%d of 8 criteria failed\n", failed);
    return failed;
}
