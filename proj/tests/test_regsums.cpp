// SPDX-License-Identifier: Apache-2.0
//
// cirwave: two-center scattering in a harmonic waveguide
// Copyright (C) 2026 The cirwave contributors
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

#include "oracles.hpp"
#include "test_util.hpp"

#include <cmath>
#include <limits>

using namespace cirwave;

namespace
{
constexpr double eps_grid[] = {0.0, -0.0012496225, -0.1, -0.25, -0.5, -0.9, -0.99};
}

TEST(HurwitzZeta, MatchesReferenceTable)
{
    for (const auto &r : oracle::zeta_half)
        EXPECT_NEAR(hurwitz_zeta_half(r.q), r.value, 2e-15 * std::max(1.0, std::abs(r.value))) << "q=" << r.q;
}

TEST(HurwitzZeta, MatchesPartialSumLimit)
{
    for (double q : {1.0, 0.99875, 0.37})
        EXPECT_NEAR(hurwitz_zeta_half(q), oracle::zeta_half_limit(q), 1e-11) << "q=" << q;
}

TEST(HurwitzZeta, ShiftIdentity)
{
    for (double q : {0.01, 0.3, 1.0, 2.5, 15.9, 16.0, 40.0})
        EXPECT_NEAR(hurwitz_zeta_half(q) - hurwitz_zeta_half(q + 1.0), 1.0 / std::sqrt(q), 1e-13) << "q=" << q;
}

TEST(HurwitzZeta, RejectsNonPositiveArgument)
{
    EXPECT_CIR_ERROR(hurwitz_zeta_half(0.0), ErrorCode::DomainError);
    EXPECT_CIR_ERROR(hurwitz_zeta_half(-1.0), ErrorCode::DomainError);
    EXPECT_CIR_ERROR(hurwitz_zeta_half(std::nan("")), ErrorCode::DomainError);
}

TEST(ChannelSums, SelfTermIsHurwitzZeta)
{
    EXPECT_NEAR(lambda_tilde(0.0, 0.0), -1.4603545088095868, 1e-14);
    EXPECT_NEAR(lambda_tilde(0.0, -0.00125), hurwitz_zeta_half(0.99875), 1e-10);
    for (double eps : eps_grid)
        EXPECT_NEAR(lambda_tilde(0.0, eps), hurwitz_zeta_half(1.0 + eps), 1e-13) << "eps=" << eps;
}

TEST(ChannelSums, ValueAtOriginConvention)
{
    EXPECT_EQ(f_tilde(0.0, -0.00125), 0.00125);
    EXPECT_EQ(f_tilde(0.0, 0.0), 0.0);
    for (double eps : eps_grid)
        EXPECT_EQ(f_tilde(0.0, eps), -eps);
}

TEST(ChannelSums, MatchReferenceTable)
{
    for (const auto &r : oracle::sums)
    {
        EXPECT_NEAR(lambda_tilde(r.x, r.eps), r.lambda, 1e-13) << "x=" << r.x << " eps=" << r.eps;
        EXPECT_NEAR(f_tilde(r.x, r.eps), r.f, 1e-13) << "x=" << r.x << " eps=" << r.eps;
    }
}

TEST(ChannelSums, MatchBruteForceSummation)
{
    for (double x : {0.05, 0.2, 1.0, 3.0, 3.999, 4.0, 5.0, 12.0, 30.0})
        for (double eps : eps_grid)
        {
            EXPECT_NEAR(lambda_tilde(x, eps), oracle::brute_lambda_tilde(x, eps), 1e-12) << x << " " << eps;
            EXPECT_NEAR(f_tilde(x, eps), oracle::brute_f_tilde(x, eps), 1e-12) << x << " " << eps;
        }
}

TEST(ChannelSums, LargeArgumentExamples)
{
    EXPECT_NEAR(lambda_tilde(10.0, 0.0), -0.199954, 1e-6);
    EXPECT_NEAR(f_tilde(10.0, 0.0), -0.019954, 1e-6);
    for (double x : {5.0, 8.0, 20.0})
    {
        EXPECT_NEAR(lambda_tilde(x, -0.3) + 2.0 / x, static_cast<double>(oracle::raw_lambda(x, -0.3)), 1e-13);
        EXPECT_NEAR(f_tilde(x, -0.3) + 2.0 / (x * x), static_cast<double>(oracle::raw_f(x, -0.3)), 1e-13);
    }
}

TEST(ChannelSums, DecayToCounterterm)
{
    for (double eps : {0.0, -0.0012496225, -0.25, -0.5})
    {
        EXPECT_NEAR(lambda_tilde(60.0, eps), -2.0 / 60.0, 1e-15);
        EXPECT_NEAR(f_tilde(60.0, eps), -2.0 / 3600.0, 1e-15);
    }
}

TEST(ChannelSums, SummationRoutesAgreeInOverlap)
{
    using detail::SumKind;
    for (double x : {0.5, 1.5, 3.0, 4.0, 5.5})
        for (double eps : eps_grid)
        {
            EXPECT_NEAR(detail::em_sum(SumKind::Lambda, x, eps, 1e-13),
                        detail::direct_sum(SumKind::Lambda, x, eps, 1e-13), 1e-14);
            EXPECT_NEAR(detail::em_sum(SumKind::F, x, eps, 1e-13), detail::direct_sum(SumKind::F, x, eps, 1e-13),
                        1e-14);
        }
}

// d/dx Lambda~ = -F~ + 2/x^2 - 2/x^2 = -F~, checked with Richardson-refined
// central differences.
TEST(ChannelSums, DerivativeIdentity)
{
    auto central = [](double x, double eps, double h) {
        return (lambda_tilde(x + h, eps) - lambda_tilde(x - h, eps)) / (2.0 * h);
    };
    for (double x : {0.3, 1.0, 2.0, 4.0, 7.0})
        for (double eps : {0.0, -0.0012496225, -0.5})
        {
            const double d1 = central(x, eps, 1e-3), d2 = central(x, eps, 5e-4);
            const double rich = (4.0 * d2 - d1) / 3.0;
            EXPECT_NEAR(rich, -f_tilde(x, eps), 1e-9) << "x=" << x << " eps=" << eps;
            EXPECT_LT(std::abs(d2 + f_tilde(x, eps)), std::abs(d1 + f_tilde(x, eps)) + 1e-12);
        }
}

// Both sums increase with x for eps in [-1/4, 0]; deeper in the band the
// channel-1 term dominates and Lambda~ is no longer monotone.
TEST(ChannelSums, MonotoneInSeparation)
{
    for (double eps : {0.0, -0.0012496225, -0.1, -0.25})
    {
        double pl = lambda_tilde(0.0, eps), pf = f_tilde(1e-6, eps);
        for (double x = 0.05; x <= 30.0; x *= 1.25)
        {
            const double l = lambda_tilde(x, eps), f = f_tilde(x, eps);
            EXPECT_GT(l, pl) << "x=" << x << " eps=" << eps;
            EXPECT_GT(f, pf) << "x=" << x << " eps=" << eps;
            pl = l;
            pf = f;
        }
    }
    EXPECT_LT(lambda_tilde(3.0, -0.9), lambda_tilde(0.5, -0.9));
}

TEST(ChannelSums, ContinuousAtSmallSeparation)
{
    for (double eps : eps_grid)
    {
        EXPECT_NEAR(lambda_tilde(1e-8, eps), lambda_tilde(0.0, eps), 1e-7);
        // The one-sided limit of F~ differs from the value at the origin by 1/2.
        EXPECT_NEAR(f_tilde(1e-8, eps), -0.5 - eps, 1e-7);
    }
}

TEST(ChannelSums, RejectsBadArguments)
{
    EXPECT_CIR_ERROR(lambda_tilde(-1.0, 0.0), ErrorCode::DomainError);
    EXPECT_CIR_ERROR(f_tilde(1.0, -1.0), ErrorCode::DomainError);
    EXPECT_CIR_ERROR(f_tilde(1.0, 0.2), ErrorCode::DomainError);
    EXPECT_CIR_ERROR(lambda_tilde(std::nan(""), 0.0), ErrorCode::NonFinite);
}

TEST(ChannelSums, UnreachableToleranceReportsNonConvergence)
{
    SeriesOptions o;
    o.tolerance = 1e-300;
    EXPECT_CIR_ERROR(lambda_tilde(1.0, 0.0, o), ErrorCode::NonConvergence);
}

TEST(SumsFor, TypicalPoint)
{
    const auto p = WaveguideParams::make(0.0707, 0.5, 1.0);
    const auto s = sums_for(p);
    EXPECT_NEAR(s.alpha, -1.4587214810617198, 1e-13);
    EXPECT_NEAR(s.beta, lambda_tilde(2.0, epsilon(p)), 0.0);
    EXPECT_NEAR(s.gamma, f_tilde(2.0, epsilon(p)), 0.0);
}

TEST(SumsFor, SingleCenter)
{
    const auto s = sums_for(WaveguideParams::make(1e-7, 0.0, 1.0));
    EXPECT_NEAR(s.alpha, -1.4603545, 1e-7);
    EXPECT_EQ(s.beta, s.alpha);
    EXPECT_NEAR(s.gamma, 0.0, 1e-14);
}

TEST(SumsFor, WideSeparation)
{
    const auto s = sums_for(WaveguideParams::make(0.0707, 10.0, 1.0));
    EXPECT_NEAR(s.beta, -2.0 / 40.0, 1e-15);
    EXPECT_NEAR(s.gamma, -2.0 / 1600.0, 1e-15);
}
