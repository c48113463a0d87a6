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

#ifndef CIRWAVE_SCATTERING_HPP
#define CIRWAVE_SCATTERING_HPP

#include <cirwave/error.hpp>
#include <cirwave/params.hpp>
#include <cirwave/regsums.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace cirwave
{

using cplx = std::complex<double>;

namespace detail
{
using lreal = long double;
using lcplx = std::complex<long double>;

inline constexpr double conditioning_floor = 1e-14;

inline cplx narrow(const lcplx &z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

// cos/sin of theta = k a together with e^{i theta}, shared by all closed forms.
struct Phase
{
    lreal theta, c, s;
    lcplx e1; // e^{i theta}

    explicit Phase(const WaveguideParams &p)
        : theta(static_cast<lreal>(p.ka_perp) * static_cast<lreal>(p.a_half_sep)), c(std::cos(theta)),
          s(std::sin(theta)), e1(c, s)
    {
    }
};

inline void require_two_centers(const WaveguideParams &p, const char *who)
{
    if (p.a_half_sep == 0.0)
        throw Error(ErrorCode::SingleCenterInput, std::string(who) + " needs a_half_sep > 0");
}
} // namespace detail

// Coefficients of the 2x2 system for the contact strengths:
//   G eta1 + H eta2 = chi,   H eta1 + G eta2 = conj(chi).
// The parity combinations are assembled directly so that the eta solve
// never subtracts nearly equal G and H.
struct GHChi
{
    cplx G, H, chi;
    cplx g_plus_h, g_minus_h; // G + H, G - H
    cplx chi_sum, chi_diff;   // chi + conj(chi), chi - conj(chi)
    double scale = 1.0;       // magnitude of the largest assembled term
};

// eta1 = (sum + diff)/2, eta2 = (sum - diff)/2.
struct EtaPair
{
    cplx sum, diff;

    static EtaPair from_components(cplx eta1, cplx eta2) { return {eta1 + eta2, eta1 - eta2}; }
    cplx eta1() const { return 0.5 * (sum + diff); }
    cplx eta2() const { return 0.5 * (sum - diff); }
};

struct AmplitudePair
{
    cplx f_e, f_o;
    cplx fe_over_cos; // f_e / cos(ka), finite as cos(ka) -> 0
    cplx fo_over_sin; // f_o / sin(ka), finite as ka -> 0
    bool odd_defined = true;

    // Reduced forms by division; only for hand-built values away from ka = 0.
    static AmplitudePair from_values(cplx fe, cplx fo, double ka = 1.0)
    {
        AmplitudePair f{fe, fo, fe / std::cos(ka), fo / std::sin(ka), true};
        return f;
    }
};

struct TransmissionSet
{
    double t_tot = 1.0, t_e = 1.0, t_o = 1.0, r = 0.0;
};

inline GHChi gh_chi(const WaveguideParams &p, const RegularizedSums &s)
{
    using detail::lcplx;
    using detail::lreal;
    detail::require_two_centers(p, "gh_chi");
    const detail::Phase ph(p);
    const lreal k = p.ka_perp, a = p.a_half_sep, eps = epsilon(p);
    const lreal b = p.coupling.a3d();
    const lreal al = s.alpha, be = s.beta, ga = s.gamma;
    const lcplx I(0, 1);
    const lcplx e2 = ph.e1 * ph.e1;
    const lreal rsqpi = 1.0L / std::sqrt(std::numbers::pi_v<lreal>);

    const lcplx G = 1.0L + 0.5L * b * al + I * b / k - 2.0L * a * b * (1.0L - eps);
    const lcplx H = 0.5L * b * be + I * (b / k) * e2 - 2.0L * a * b * (e2 + ga);
    const lcplx gp = 1.0L + 0.5L * b * (al + be) + I * (b / k) * (2.0L * ph.c * ph.e1) -
                     2.0L * a * b * (2.0L * ph.c * ph.e1 - eps + ga);
    const lcplx gm = 1.0L + 0.5L * b * (al - be) + (b / k) * (2.0L * ph.s * ph.e1) -
                     2.0L * a * b * (-2.0L * I * ph.s * ph.e1 - eps - ga);
    const lcplx chi = ph.e1 * (1.0L + 2.0L * I * ph.theta) * rsqpi;

    GHChi g;
    g.G = detail::narrow(G);
    g.H = detail::narrow(H);
    g.chi = detail::narrow(chi);
    g.g_plus_h = detail::narrow(gp);
    g.g_minus_h = detail::narrow(gm);
    g.chi_sum = detail::narrow(lcplx(2.0L * (ph.c - 2.0L * ph.theta * ph.s) * rsqpi, 0.0L));
    g.chi_diff = detail::narrow(lcplx(0.0L, 2.0L * (ph.s + 2.0L * ph.theta * ph.c) * rsqpi));
    g.scale = static_cast<double>(std::max({1.0L, std::abs(b) * (std::abs(al) + std::abs(be) + 2.0L / k) / 2.0L,
                                            2.0L * a * std::abs(b) * (2.0L + std::abs(eps) + std::abs(ga))}));
    return g;
}

inline EtaPair eta_pair(const GHChi &g)
{
    const double floor = detail::conditioning_floor * g.scale;
    const double dp = std::abs(g.g_plus_h), dm = std::abs(g.g_minus_h);
    if (dp < floor || dm < floor)
        throw Error(ErrorCode::IllConditioned, "G^2 - H^2 below conditioning floor", dp * dm);
    using detail::lcplx;
    const lcplx sum = lcplx(g.chi_sum) / lcplx(g.g_plus_h);
    const lcplx diff = lcplx(g.chi_diff) / lcplx(g.g_minus_h);
    return {detail::narrow(sum), detail::narrow(diff)};
}

inline AmplitudePair amplitudes_closed(const WaveguideParams &p, const RegularizedSums &s)
{
    using detail::lcplx;
    using detail::lreal;
    detail::require_two_centers(p, "amplitudes_closed");
    if (!p.coupling.interacting())
        return {cplx(0), cplx(0), cplx(0), cplx(0), true};

    const detail::Phase ph(p);
    const lreal k = p.ka_perp, a = p.a_half_sep, eps = epsilon(p), q = p.coupling.inv_ratio();
    const lreal al = s.alpha, be = s.beta, ga = s.gamma;
    const lcplx I(0, 1);

    const lcplx de = ph.c * ph.e1 - I * k * (0.5L * q + 0.25L * (al + be) - a * (2.0L * ph.c * ph.e1 - eps + ga));
    const lcplx dn = -I * ph.s * ph.e1 -
                     I * k * (0.5L * q + 0.25L * (al - be) - a * (-2.0L * I * ph.s * ph.e1 - eps - ga));
    const lreal scale = std::max(1.0L, k * (std::abs(q) + std::abs(al) + std::abs(be) + a * (3.0L + std::abs(ga))));
    if (std::abs(de) < detail::conditioning_floor * scale || std::abs(dn) < detail::conditioning_floor * scale)
        throw Error(ErrorCode::IllConditioned, "amplitude denominator below conditioning floor",
                    static_cast<double>(std::min(std::abs(de), std::abs(dn))));

    const lcplx fe_c = -(ph.c - 2.0L * ph.theta * ph.s) / de;
    const lcplx fo_s = -(ph.s + 2.0L * ph.theta * ph.c) / dn;
    AmplitudePair f;
    f.fe_over_cos = detail::narrow(fe_c);
    f.fo_over_sin = detail::narrow(fo_s);
    f.f_e = detail::narrow(ph.c * fe_c);
    f.f_o = detail::narrow(ph.s * fo_s);
    return f;
}

inline AmplitudePair amplitudes_via_eta(const WaveguideParams &p, const EtaPair &e)
{
    using detail::lcplx;
    using detail::lreal;
    detail::require_two_centers(p, "amplitudes_via_eta");
    const detail::Phase ph(p);
    const lreal pref = std::sqrt(std::numbers::pi_v<lreal>) * static_cast<lreal>(p.coupling.a3d()) /
                       static_cast<lreal>(p.ka_perp);
    const lcplx fe_c = lcplx(0, -1) * pref * lcplx(e.sum);
    const lcplx fo_s = -pref * lcplx(e.diff);
    AmplitudePair f;
    f.fe_over_cos = detail::narrow(fe_c);
    f.fo_over_sin = detail::narrow(fo_s);
    f.f_e = detail::narrow(ph.c * fe_c);
    f.f_o = detail::narrow(ph.s * fo_s);
    return f;
}

// Single-center even amplitude; alpha = zeta(1/2, 1+eps).
inline cplx olshanii_fe(double ka_perp, const Coupling &c, const SeriesOptions &opt = {})
{
    if (!(ka_perp > 0.0 && ka_perp < 2.0))
        throw Error(ErrorCode::OutOfBand, "ka_perp must lie in (0, 2)", ka_perp);
    if (!c.interacting())
        return 0.0;
    const double alpha = lambda_tilde(0.0, epsilon(ka_perp), opt);
    return cplx(0, -2) / (ka_perp * (c.inv_ratio() + alpha) + cplx(0, 2));
}

inline cplx olshanii_fe(double ka_perp, double inv_ratio, const SeriesOptions &opt = {})
{
    return olshanii_fe(ka_perp, Coupling::ratio(inv_ratio), opt);
}

// Largest | |f|^2 + Re f | over the defined parities.
inline double unitarity_defect(const AmplitudePair &f)
{
    const double de = std::abs(std::norm(f.f_e) + f.f_e.real());
    const double dn = f.odd_defined ? std::abs(std::norm(f.f_o) + f.f_o.real()) : 0.0;
    return std::max(de, dn);
}

inline TransmissionSet transmissions(const AmplitudePair &f, double tolerance = 1e-10)
{
    const double defect = unitarity_defect(f);
    if (!(defect <= tolerance))
        throw Error(ErrorCode::UnitarityViolation, "amplitudes leave the unitarity circle", defect);
    TransmissionSet t;
    t.t_tot = std::norm(1.0 + f.f_e + f.f_o);
    t.t_e = std::norm(1.0 + f.f_e);
    t.t_o = std::norm(1.0 + f.f_o);
    t.r = std::norm(f.f_e - f.f_o);
    return t;
}

// Front door: validates, evaluates the sums, and routes a = 0 to the
// single-center amplitude with the odd channel marked absent.
inline AmplitudePair amplitudes(const WaveguideParams &raw, const SeriesOptions &opt = {})
{
    const WaveguideParams p = validate(raw);
    if (p.single_center())
    {
        const cplx fe = olshanii_fe(p.ka_perp, p.coupling, opt);
        return {fe, cplx(0), fe, cplx(0), false};
    }
    return amplitudes_closed(p, sums_for(p, opt));
}

} // namespace cirwave

#endif
