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

#ifndef CIRWAVE_EFFECTIVE1D_HPP
#define CIRWAVE_EFFECTIVE1D_HPP

#include <cirwave/error.hpp>
#include <cirwave/params.hpp>
#include <cirwave/regsums.hpp>
#include <cirwave/scattering.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

namespace cirwave
{

// Strengths of the reduced potential V(z) = 1/2 [g_plus d(z-a) + g_minus d(z+a)].
struct Effective1DCouplings
{
    cplx g_plus, g_minus;
};

inline Effective1DCouplings g1d(const WaveguideParams &p, const AmplitudePair &f, double resonance_floor = 1e-12)
{
    const double k = p.ka_perp, theta = p.ka_perp * p.a_half_sep;
    const cplx I(0, 1);
    const cplx den_plus = 1.0 + f.f_e + f.f_o;
    const cplx den_minus = std::exp(cplx(0, -2.0 * theta)) + f.f_e - f.f_o;
    if (std::abs(den_plus) < resonance_floor)
        throw Error(ErrorCode::AtResonance, "1 + f_e + f_o vanishes", std::abs(den_plus));
    if (std::abs(den_minus) < resonance_floor)
        throw Error(ErrorCode::AtResonance, "exp(-2ika) + f_e - f_o vanishes", std::abs(den_minus));
    const cplx pref = I * k * std::exp(cplx(0, -theta));
    return {pref * (f.fe_over_cos + I * f.fo_over_sin) / den_plus,
            pref * (f.fe_over_cos - I * f.fo_over_sin) / den_minus};
}

namespace detail
{

using Mat2 = std::array<std::array<cplx, 2>, 2>;

// 1 - e^{i phi} without cancellation for small phi.
inline cplx one_minus_expi(double phi) { return cplx(0, -2.0 * std::sin(0.5 * phi)) * std::exp(cplx(0, 0.5 * phi)); }

// Jump matrix of a single delta at z0 acting on plane-wave amplitudes
// (A, B) of A e^{ikz} + B e^{-ikz}: I + u K(z0), with K nilpotent.
inline Mat2 jump_kernel(double k, double z0)
{
    return {{{cplx(1), std::exp(cplx(0, -2.0 * k * z0))}, {-std::exp(cplx(0, 2.0 * k * z0)), cplx(-1)}}};
}

// K(z1) K(z2) with the phase differences formed stably.
inline Mat2 kernel_product(double k, double z1, double z2)
{
    const double d = 2.0 * k * (z1 - z2);
    const cplx m = one_minus_expi(-d), p = one_minus_expi(d);
    return {{{m, std::exp(cplx(0, -2.0 * k * z2)) * m}, {std::exp(cplx(0, 2.0 * k * z2)) * p, p}}};
}

} // namespace detail

// Transmission/reflection of the double-delta problem by transfer matrices.
// The 1/2 in V is folded in here: the derivative jump at z0 is
// psi'(z0+) - psi'(z0-) = 2 * (1/2) g psi(z0) = g psi(z0), i.e. u = g/(2ik).
inline AmplitudePair double_delta_scatter(const Effective1DCouplings &g, double a, double k)
{
    if (!(k > 0.0) || !(a >= 0.0))
        throw Error(ErrorCode::DomainError, "double_delta_scatter needs k > 0 and a >= 0");
    const cplx u = g.g_plus / cplx(0, 2.0 * k);
    const cplx v = g.g_minus / cplx(0, 2.0 * k);
    const auto k1 = detail::jump_kernel(k, a), k2 = detail::jump_kernel(k, -a);
    const auto kk = detail::kernel_product(k, a, -a);
    // P = M(a) M(-a) = I + u K1 + v K2 + u v K1 K2; (t, 0) = P (1, r).
    const cplx p21 = u * k1[1][0] + v * k2[1][0] + u * v * kk[1][0];
    const cplx p22 = 1.0 + u * k1[1][1] + v * k2[1][1] + u * v * kk[1][1];
    if (!(std::abs(p22) > 0.0) || !std::isfinite(std::abs(p22)) || !std::isfinite(std::abs(p21)))
        throw Error(ErrorCode::SingularMatrix, "transfer matrix has no scattering solution", std::abs(p22));
    const cplx r = -p21 / p22;
    const cplx t = 1.0 / p22; // det P = 1
    AmplitudePair f;
    f.f_e = 0.5 * (t - 1.0 + r);
    f.f_o = 0.5 * (t - 1.0 - r);
    const double theta = k * a;
    f.fe_over_cos = f.f_e / std::cos(theta);
    f.fo_over_sin = theta > 0.0 ? f.f_o / std::sin(theta) : cplx(std::nan(""), std::nan(""));
    f.odd_defined = theta > 0.0;
    return f;
}

// psi(z) of the double-delta solution with incident e^{ikz} from the left.
inline cplx double_delta_field(const Effective1DCouplings &g, double a, double k, double z)
{
    const AmplitudePair f = double_delta_scatter(g, a, k);
    const cplx r = f.f_e - f.f_o;
    const cplx I(0, 1);
    if (z < -a)
        return std::exp(I * k * z) + r * std::exp(-I * k * z);
    const cplx v = g.g_minus / cplx(0, 2.0 * k);
    const auto k2 = detail::jump_kernel(k, -a);
    const cplx A = 1.0 + v * (k2[0][0] + k2[0][1] * r);
    const cplx B = r + v * (k2[1][0] + k2[1][1] * r);
    if (z <= a)
        return A * std::exp(I * k * z) + B * std::exp(-I * k * z);
    return (1.0 + f.f_e + f.f_o) * std::exp(I * k * z);
}

// max(|df_e|, |df_o|) between the 3D amplitudes and those rebuilt from the
// effective 1D model.
inline double verify_roundtrip(const WaveguideParams &raw, const SeriesOptions &opt = {})
{
    const WaveguideParams p = validate(raw);
    detail::require_two_centers(p, "verify_roundtrip");
    const AmplitudePair f = amplitudes_closed(p, sums_for(p, opt));
    const AmplitudePair back = double_delta_scatter(g1d(p, f), p.a_half_sep, p.ka_perp);
    return std::max(std::abs(back.f_e - f.f_e), std::abs(back.f_o - f.f_o));
}

} // namespace cirwave

#endif
