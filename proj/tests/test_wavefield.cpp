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
#include <numbers>

using namespace cirwave;
using testutil::rel;

namespace
{
struct Solved
{
    WaveguideParams p;
    AmplitudePair f;
    EtaPair e;
};

Solved solve(double k, double a, double q)
{
    const auto p = WaveguideParams::make(k, a, q);
    const auto s = sums_for(p);
    return {p, amplitudes_closed(p, s), eta_pair(gh_chi(p, s))};
}

const double sqpi = std::sqrt(std::numbers::pi);
} // namespace

TEST(ModeCoefficients, RoutesAgree)
{
    check::ParamSampler sampler(21);
    for (int i = 0; i < 300; ++i)
    {
        const auto p = sampler.next();
        if (p.coupling.inv_ratio() == 0.0)
            continue;
        const auto s = sums_for(p);
        const auto m = mode_coefficients(p, amplitudes_closed(p, s), eta_pair(gh_chi(p, s)), 4);
        EXPECT_LT(m.route_mismatch, 1e-12) << p.ka_perp << " " << p.a_half_sep << " " << p.coupling.inv_ratio();
    }
}

TEST(ModeCoefficients, EvenAmplitudeAlone)
{
    const auto p = WaveguideParams::make(0.3, 0.4, 1.0);
    const cplx fe(-0.2, 0.4);
    const auto f = AmplitudePair::from_values(fe, 0.0, 0.3 * 0.4);
    const auto m = mode_coefficients(p, f, EtaPair{0.0, 0.0}, 1);
    EXPECT_LT(std::abs(m.a0 - m.b0), 1e-16);
    EXPECT_LT(std::abs(m.a0 - fe / (2.0 * std::cos(0.12))), 1e-15);
}

TEST(ModeCoefficients, SymmetricStrengthsHaveNoOddClosedPart)
{
    const auto p = WaveguideParams::make(0.3, 0.4, 1.0);
    const auto e = EtaPair::from_components(cplx(0.1, 0.2), cplx(0.1, 0.2));
    const auto m = mode_coefficients(p, amplitudes_via_eta(p, e), e, 16);
    for (const auto &d : m.dn)
        EXPECT_EQ(d, cplx(0));
}

// The growth of C_n is the cosh(k_n a) factor; without it the coefficients
// fall off like 1/k_n.
TEST(ModeCoefficients, ScaledCoefficientsDecay)
{
    const auto s = solve(0.0707, 0.5, 2.0);
    const auto m = mode_coefficients(s.p, s.f, s.e, 40);
    const double expected = sqpi * 0.5 * std::abs(s.e.sum);
    double prev = INFINITY;
    for (std::size_t n = 1; n <= 40; ++n)
    {
        const double k_n = kn(s.p, n);
        const double scaled = std::abs(m.cn[n - 1]) / std::cosh(k_n * 0.5);
        EXPECT_NEAR(scaled * k_n, expected, 1e-13 * expected) << n;
        EXPECT_LT(scaled, prev);
        prev = scaled;
    }
}

TEST(OpenChannel, AsymptoticForm)
{
    const auto s = solve(0.0707, 0.5, 2.0);
    const auto m = mode_coefficients(s.p, s.f, s.e, 1);
    const cplx I(0, 1);
    const double k = 0.0707;
    for (double z : {20.0 / k, 50.0 / k})
    {
        EXPECT_LT(std::abs(psi0(z, s.p, m) - (1.0 + s.f.f_e + s.f.f_o) * std::exp(I * k * z)), 1e-12);
        EXPECT_LT(std::abs(psi0(-z, s.p, m) - (std::exp(-I * k * z) + (s.f.f_e - s.f.f_o) * std::exp(I * k * z))),
                  1e-12);
    }
}

TEST(OpenChannel, ContinuousAtImpurities)
{
    const auto s = solve(0.9, 0.6, -1.3);
    const auto m = mode_coefficients(s.p, s.f, s.e, 1);
    for (double z0 : {0.6, -0.6})
        EXPECT_LT(std::abs(psi0(z0 + 1e-12, s.p, m) - psi0(z0 - 1e-12, s.p, m)), 1e-10);
}

TEST(ClosedChannel, ParityAndCentreValue)
{
    const auto p = WaveguideParams::make(0.3, 0.5, 1.0);
    const auto e = EtaPair::from_components(cplx(0.2, 0.1), cplx(0.2, 0.1));
    const auto m = mode_coefficients(p, amplitudes_via_eta(p, e), e, 8);
    for (std::size_t n = 1; n <= 8; ++n)
    {
        const double k_n = kn(p, n);
        EXPECT_LT(std::abs(psi_n(0.0, n, p, m) - m.cn[n - 1] * std::exp(-k_n * 0.5) / std::cosh(k_n * 0.5)),
                  1e-15);
        EXPECT_LT(std::abs(psi_n(1.3, n, p, m) - psi_n(-1.3, n, p, m)), 1e-16);
    }
    const auto eo = EtaPair::from_components(cplx(0.2, 0.1), -cplx(0.2, 0.1));
    const auto mo = mode_coefficients(p, amplitudes_via_eta(p, eo), eo, 8);
    for (std::size_t n = 1; n <= 8; ++n)
    {
        EXPECT_LT(std::abs(psi_n(0.0, n, p, mo)), 1e-16);
        EXPECT_LT(std::abs(psi_n(1.3, n, p, mo) + psi_n(-1.3, n, p, mo)), 1e-16);
    }
}

TEST(ClosedChannel, DecayOutsideImpurities)
{
    const auto s = solve(0.0707, 0.5, 2.0);
    const auto m = mode_coefficients(s.p, s.f, s.e, 10);
    for (std::size_t n = 1; n <= 10; ++n)
    {
        const double k_n = kn(s.p, n);
        const double at_right = std::abs(psi_n(0.5, n, s.p, m)), at_left = std::abs(psi_n(-0.5, n, s.p, m));
        for (double d : {0.1, 0.7, 2.0})
        {
            EXPECT_NEAR(std::abs(psi_n(0.5 + d, n, s.p, m)), at_right * std::exp(-k_n * d), 1e-14 * at_right);
            EXPECT_NEAR(std::abs(psi_n(-0.5 - d, n, s.p, m)), at_left * std::exp(-k_n * d), 1e-14 * at_left);
        }
    }
}

TEST(ClosedChannel, IndexOutOfRange)
{
    const auto s = solve(0.0707, 0.5, 2.0);
    const auto m = mode_coefficients(s.p, s.f, s.e, 3);
    EXPECT_CIR_ERROR(psi_n(0.0, 0, s.p, m), ErrorCode::DomainError);
    EXPECT_CIR_ERROR(psi_n(0.0, 4, s.p, m), ErrorCode::DomainError);
}

// Explicit closed-mode sum against the regularized on-axis form.
TEST(AxisField, EqualsModeSum)
{
    const auto s = solve(0.0707, 0.5, 2.0);
    const std::size_t n_max = 2000;
    const auto m = mode_coefficients(s.p, s.f, s.e, n_max);
    const AxisWavefunction w(s.p, s.e);
    for (double z : {1.2, -1.5, 0.0, 0.2})
    {
        cplx closed = 0.0;
        for (std::size_t n = n_max; n >= 1; --n)
            closed += psi_n(z, n, s.p, m);
        const cplx modes = (psi0(z, s.p, m) + closed) / sqpi;
        EXPECT_LT(std::abs(w.value(z) - modes), 1e-12) << z;
    }
}

TEST(AxisField, SingularCoefficients)
{
    const auto s = solve(0.0707, 0.5, 2.0);
    const auto a = psi_axis(0.5, s.p, s.e);
    EXPECT_LT(std::abs(a.singular1 + 0.25 * s.e.eta1()), 1e-16);
    EXPECT_LT(std::abs(a.singular2 + 0.25 * s.e.eta2()), 1e-16);
    EXPECT_TRUE(std::isnan(a.value.real()));
    const AxisWavefunction w(s.p, s.e);
    EXPECT_CIR_ERROR(w.value(-0.5), ErrorCode::DomainError);
}

TEST(AxisField, FarFieldIsOpenChannel)
{
    const auto s = solve(0.0707, 0.5, 2.0);
    const auto m = mode_coefficients(s.p, s.f, s.e, 1);
    for (double z : {40.0, -40.0, 1000.0})
        EXPECT_LT(std::abs(psi_axis(z, s.p, s.e).value - psi0(z, s.p, m) / sqpi), 1e-15) << z;
}

TEST(AxisField, RegularPartIsContinuous)
{
    const auto s = solve(0.5, 0.4, 1.0);
    const AxisWavefunction w(s.p, s.e);
    for (double z0 : {0.4, -0.4})
        EXPECT_LT(std::abs(w.regular(z0 + 1e-9) - w.regular(z0 - 1e-9)), 1e-7);
}

TEST(AxisField, ClosedSumSplitMatchesRawSum)
{
    const auto s = solve(0.0707, 0.5, 2.0);
    const AxisWavefunction w(s.p, s.e);
    const double eps = epsilon(s.p);
    for (double z : {3.0, 6.0})
    {
        const double x = 2.0 * (z - 0.5);
        const cplx split = w.singular1() / (z - 0.5) + w.channel_closed(z, 0.5, s.e.eta1());
        const cplx raw = -0.5 * 0.5 * s.e.eta1() * static_cast<double>(oracle::raw_lambda(x, eps));
        EXPECT_LT(std::abs(split - raw), 1e-14) << z;
    }
}

TEST(AxisField, SymmetricStrengthsGiveSymmetricScattering)
{
    const auto p = WaveguideParams::make(0.3, 0.5, 1.0);
    const auto e = EtaPair::from_components(cplx(0.2, -0.3), cplx(0.2, -0.3));
    const AxisWavefunction w(p, e);
    for (double z : {0.1, 0.9, 2.5})
        EXPECT_LT(std::abs(w.scattered_regular(z) - w.scattered_regular(-z)), 1e-14);
}

TEST(ContactRecovery, ReproducesStrengths)
{
    const double pts[][3] = {{0.0707, 0.5, 2.0}, {0.0707, 0.1, -1.0}, {1.3, 0.8, -2.5}, {0.5, 1.5, 0.4},
                             {7.07e-5, 0.3, 1.46}};
    for (const auto &q : pts)
    {
        const auto s = solve(q[0], q[1], q[2]);
        const auto r = eta_from_wavefunction(s.p, s.e);
        EXPECT_LT(rel(r.eta1(), s.e.eta1()), 1e-6) << q[0] << " " << q[1] << " " << q[2];
        EXPECT_LT(rel(r.eta2(), s.e.eta2()), 1e-6) << q[0] << " " << q[1] << " " << q[2];
    }
}

TEST(ContactRecovery, OneSidedLimitScalesStrength)
{
    const auto s = solve(0.0707, 0.5, 2.0);
    RecoveryOptions ro;
    ro.self_term = SelfTermLimit::one_sided;
    const auto r = eta_from_wavefunction(s.p, s.e, ro);
    const double factor = 1.0 - 0.5 * 0.5;
    EXPECT_LT(rel(r.eta1(), factor * s.e.eta1()), 1e-6);
    EXPECT_LT(rel(r.eta2(), factor * s.e.eta2()), 1e-6);
}

TEST(ContactRecovery, BareIncidentWave)
{
    const auto p = WaveguideParams::make(0.3, 0.5, 1.0);
    const auto r = eta_from_wavefunction(p, EtaPair{0.0, 0.0});
    const auto g = gh_chi(p, sums_for(p));
    EXPECT_LT(std::abs(r.eta1() - g.chi), 1e-7);
    EXPECT_LT(std::abs(r.eta2() - std::conj(g.chi)), 1e-7);
}
