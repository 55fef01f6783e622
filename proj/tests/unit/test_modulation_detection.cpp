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

#include <pchbf/detection.hpp>
#include <pchbf/error.hpp>
#include <pchbf/modulation.hpp>
#include <pchbf/random.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

#include <cmath>

using namespace pchbf;

namespace
{

CMat random_matrix(Index rows, Index cols, Rng &rng)
{
    CMat m(rows, cols);
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i)
            m(i, j) = complex_normal(rng);
    return m;
}

std::vector<std::vector<oracle::cd>> to_nested(const CMat &a)
{
    std::vector<std::vector<oracle::cd>> out(static_cast<std::size_t>(a.rows()),
                                             std::vector<oracle::cd>(static_cast<std::size_t>(a.cols())));
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a(i, j);
    return out;
}

} // namespace

TEST(Qam16, MatchesReferenceTable)
{
    const Qam16 q;
    for (int l = 0; l < 16; ++l)
        EXPECT_NEAR(std::abs(q.point(l) - oracle::qam16_point(l)), 0.0, 1e-15) << l;
    EXPECT_NEAR(std::abs(q.point(0) - cplx(-3.0, -3.0) / std::sqrt(10.0)), 0.0, 1e-15);
    EXPECT_THROW((void)q.point(16), Error);
}

TEST(Qam16, ZeroBitsMapToCorner)
{
    const Qam16 q;
    const std::vector<std::uint8_t> bits{0, 0, 0, 0};
    const CVec s = q.modulate(bits);
    ASSERT_EQ(s.size(), 1);
    EXPECT_NEAR(std::abs(s(0) - q.point(0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s(0)), std::sqrt(18.0 / 10.0), 1e-15);
}

TEST(Qam16, UnitMeanPower)
{
    const Qam16 q;
    double p = 0.0;
    for (const auto &pt : q.constellation())
        p += std::norm(pt);
    EXPECT_NEAR(p / 16.0, 1.0, 1e-12);

    Rng rng(1);
    std::uniform_int_distribution<int> label(0, 15);
    std::vector<int> labels(1000000);
    for (auto &l : labels)
        l = label(rng);
    EXPECT_NEAR(q.modulate_labels(labels).squaredNorm() / 1e6, 1.0, 0.01);
}

TEST(Qam16, GrayAdjacency)
{
    const Qam16 q;
    const double step = 2.0 / std::sqrt(10.0);
    for (int a = 0; a < 16; ++a)
        for (int b = a + 1; b < 16; ++b)
            if (std::abs(std::abs(q.point(a) - q.point(b)) - step) < 1e-12)
            {
                EXPECT_EQ(__builtin_popcount(static_cast<unsigned>(a ^ b)), 1) << a << " " << b;
            }
}

TEST(Qam16, RoundTripBits)
{
    const Qam16 q;
    Rng rng(2);
    std::bernoulli_distribution coin(0.5);
    std::vector<std::uint8_t> bits(4000);
    for (auto &b : bits)
        b = coin(rng) ? 1 : 0;
    EXPECT_EQ(q.demodulate_hard(q.modulate(bits)), bits);
    EXPECT_THROW((void)q.modulate(std::vector<std::uint8_t>(6, 0)), Error);
}

TEST(Qam16, BitOrderIsMsbFirst)
{
    const Qam16 q;
    CVec s(1);
    s(0) = q.point(0b1001);
    EXPECT_EQ(q.demodulate_hard(s), (std::vector<std::uint8_t>{1, 0, 0, 1}));
}

TEST(Qam16, NearestNeighbourOracle)
{
    const Qam16 q;
    Rng rng(3);
    std::uniform_real_distribution<double> u(-1.6, 1.6);
    for (int t = 0; t < 20000; ++t)
    {
        const cplx z(u(rng), u(rng));
        EXPECT_EQ(q.demodulate_label(z), oracle::qam16_nearest(z));
    }
    for (int l = 0; l < 16; ++l)
    {
        EXPECT_EQ(q.demodulate_label(q.point(l)), l);
        EXPECT_EQ(q.demodulate_label(q.point(l) + cplx(1e-6, -1e-6)), l);
    }
}

TEST(Qam16, TiesGoToLowerLabel)
{
    const Qam16 q;
    EXPECT_EQ(q.demodulate_label({0.0, 0.0}), oracle::qam16_nearest({0.0, 0.0}));
    EXPECT_EQ(q.demodulate_label({0.0, 0.0}), 5);
    const double edge = 2.0 / std::sqrt(10.0);
    for (const cplx z : {cplx(edge, 0.3), cplx(-edge, -edge), cplx(0.0, edge), cplx(-0.1, -edge)})
        EXPECT_EQ(q.demodulate_label(z), oracle::qam16_nearest(z)) << z;
}

TEST(Mmse, ScalarLimit)
{
    CMat h(1, 1);
    h(0, 0) = 2.0;
    const cplx x0(0.3, -0.9);
    CVec y(1);
    y(0) = 2.0 * x0;
    EXPECT_NEAR(std::abs(mmse_detect(h, y, 1e-12)(0) - x0), 0.0, 1e-6);
    EXPECT_NEAR(std::abs(mmse_detect(h, y, 0.0)(0) - x0), 0.0, 1e-6);
    EXPECT_TRUE(mmse_detect(h, CVec::Zero(1), 0.5).isZero());
}

TEST(Mmse, OrthonormalColumnsClosedForm)
{
    Rng rng(4);
    for (double rho : {0.01, 0.3, 2.0})
    {
        const CMat q = random_matrix(6, 3, rng).householderQr().householderQ() * CMat::Identity(6, 3);
        CVec y(6);
        for (Index i = 0; i < 6; ++i)
            y(i) = complex_normal(rng);
        const CVec expect = q.adjoint() * y / (1.0 + rho);
        EXPECT_LT((mmse_detect(q, y, rho) - expect).norm(), 1e-12);
        EXPECT_LT((mmse_detect(q, y, 2.0 * rho, 2.0) - expect).norm(), 1e-12);
    }
}

TEST(Mmse, MatchesDirectInverse)
{
    Rng rng(5);
    const CMat h = random_matrix(8, 4, rng);
    CVec y(8);
    for (Index i = 0; i < 8; ++i)
        y(i) = complex_normal(rng);
    const CMat a = h.adjoint() * h + 0.2 * CMat::Identity(4, 4);
    EXPECT_LT((mmse_detect(h, y, 0.2) - a.inverse() * h.adjoint() * y).norm(), 1e-12);
    EXPECT_THROW((void)mmse_detect(h, CVec::Zero(7), 0.2), Error);
}

TEST(SumRate, Examples)
{
    EXPECT_EQ(sum_rate(CMat::Zero(4, 2), 0.1), 0.0);
    Rng rng(6);
    const CMat h = random_matrix(8, 1, rng);
    EXPECT_NEAR(sum_rate(h, 0.25), std::log2(1.0 + h.squaredNorm() / 0.25), 1e-12);
    EXPECT_THROW((void)sum_rate(h, 0.0), Error);
}

TEST(SumRate, EigenvalueOracle)
{
    Rng rng(7);
    for (int t = 0; t < 50; ++t)
    {
        const CMat h = random_matrix(4, 2, rng);
        const double nv = 0.05 + 0.1 * t;
        double ref = 0.0;
        for (double ev : oracle::hermitian_eigenvalues(to_nested(h * h.adjoint())))
            ref += std::log2(1.0 + std::max(ev, 0.0) / nv);
        EXPECT_NEAR(sum_rate(h, nv), ref, 1e-9);
    }
}
