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

#ifndef CIRWAVE_WAVEFIELD_HPP
#define CIRWAVE_WAVEFIELD_HPP

#include <cirwave/error.hpp>
#include <cirwave/params.hpp>
#include <cirwave/regsums.hpp>
#include <cirwave/scattering.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

namespace cirwave
{

struct ModeCoefficients
{
    cplx a0, b0;                 // outgoing open-channel weights at z = +a, -a
    std::vector<cplx> cn, dn;    // closed channels n = 1..n_max (index n-1)
    double route_mismatch = 0.0; // relative |a0,b0| disagreement between the amplitude and eta routes
};

// A0, B0 from the reduced amplitudes (no division by sin ka).
inline std::array<cplx, 2> open_channel_from_amplitudes(const AmplitudePair &f)
{
    const cplx I(0, 1);
    return {0.5 * f.fe_over_cos + 0.5 * I * f.fo_over_sin, 0.5 * f.fe_over_cos - 0.5 * I * f.fo_over_sin};
}

inline std::array<cplx, 2> open_channel_from_eta(const WaveguideParams &p, const EtaPair &e)
{
    const cplx pref(0, -std::sqrt(std::numbers::pi) * p.coupling.a3d() / p.ka_perp);
    return {pref * e.eta1(), pref * e.eta2()};
}

inline ModeCoefficients mode_coefficients(const WaveguideParams &p, const AmplitudePair &f, const EtaPair &e,
                                          std::size_t n_max = 32)
{
    detail::require_two_centers(p, "mode_coefficients");
    ModeCoefficients m;
    const auto ab = open_channel_from_amplitudes(f);
    const auto ab_eta = open_channel_from_eta(p, e);
    m.a0 = ab[0];
    m.b0 = ab[1];
    const double norm = std::max({std::abs(ab[0]), std::abs(ab[1]), 1e-300});
    m.route_mismatch = std::max(std::abs(ab[0] - ab_eta[0]), std::abs(ab[1] - ab_eta[1])) / norm;

    const double eps = epsilon(p), a = p.a_half_sep, b = p.coupling.a3d();
    const double sqpi = std::sqrt(std::numbers::pi);
    m.cn.reserve(n_max);
    m.dn.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n)
    {
        const double k_n = kn(eps, n);
        m.cn.push_back(-(sqpi * b / k_n) * std::cosh(k_n * a) * e.sum);
        m.dn.push_back(-(sqpi * b / k_n) * std::sinh(k_n * a) * e.diff);
    }
    return m;
}

inline cplx psi0(double z, const WaveguideParams &p, const ModeCoefficients &m)
{
    const double k = p.ka_perp, a = p.a_half_sep;
    const cplx I(0, 1);
    return std::exp(I * k * z) + m.a0 * std::exp(I * k * std::abs(z - a)) + m.b0 * std::exp(I * k * std::abs(z + a));
}

inline cplx psi_n(double z, std::size_t n, const WaveguideParams &p, const ModeCoefficients &m)
{
    if (n == 0 || n > m.cn.size())
        throw Error(ErrorCode::DomainError, "closed channel index out of range", static_cast<double>(n));
    const double a = p.a_half_sep, k_n = kn(p, n);
    const double e1 = std::exp(-k_n * std::abs(z - a)), e2 = std::exp(-k_n * std::abs(z + a));
    return m.cn[n - 1] / (2.0 * std::cosh(k_n * a)) * (e1 + e2) + m.dn[n - 1] / (2.0 * std::sinh(k_n * a)) * (e1 - e2);
}

// On-axis field psi(z, rho = 0) = s1/|z-a| + s2/|z+a| + S(z).
class AxisWavefunction
{
  public:
    AxisWavefunction(const WaveguideParams &p, const EtaPair &e, const SeriesOptions &opt = {})
        : k_(p.ka_perp), a_(p.a_half_sep), b_(p.coupling.a3d()), eps_(epsilon(p)), eta1_(e.eta1()),
          eta2_(e.eta2()), opt_(opt)
    {
    }

    cplx singular1() const { return -0.5 * b_ * eta1_; }
    cplx singular2() const { return -0.5 * b_ * eta2_; }

    // Regular part. Continuous everywhere, including z = +-a.
    cplx regular(double z) const { return incident(z) + channel(z, a_, eta1_) + channel(z, -a_, eta2_); }

    // dS/dz. At z = +-a the self channel enters with its coincident value.
    cplx regular_slope(double z) const
    {
        return incident_slope(z) + channel_slope(z, a_, eta1_) + channel_slope(z, -a_, eta2_);
    }

    cplx scattered_regular(double z) const { return regular(z) - incident(z); }

    cplx value(double z) const
    {
        if (z == a_ || z == -a_)
            throw Error(ErrorCode::DomainError, "field is singular at the impurity positions", z);
        return singular1() / std::abs(z - a_) + singular2() / std::abs(z + a_) + regular(z);
    }

    // Contribution of the channel centred at zc to S and dS/dz: an
    // open-mode part and a closed-mode (regularized sum) part.
    cplx channel(double z, double zc, cplx eta) const { return channel_open(z, zc, eta) + channel_closed(z, zc, eta); }

    cplx channel_slope(double z, double zc, cplx eta) const
    {
        return channel_open_slope(z, zc, eta) + channel_closed_slope(z, zc, eta);
    }

    cplx channel_open(double z, double zc, cplx eta) const
    {
        return cplx(0, -b_ / k_) * eta * std::exp(cplx(0, k_ * std::abs(z - zc)));
    }

    cplx channel_open_slope(double z, double zc, cplx eta) const
    {
        const double sg = z >= zc ? 1.0 : -1.0;
        return sg * b_ * eta * std::exp(cplx(0, k_ * std::abs(z - zc)));
    }

    cplx channel_closed(double z, double zc, cplx eta) const
    {
        return -0.5 * b_ * eta * lambda_tilde(2.0 * std::abs(z - zc), eps_, opt_);
    }

    cplx channel_closed_slope(double z, double zc, cplx eta) const
    {
        const double sg = z >= zc ? 1.0 : -1.0;
        return sg * b_ * eta * f_tilde(2.0 * std::abs(z - zc), eps_, opt_);
    }

    cplx incident(double z) const { return std::exp(cplx(0, k_ * z)) / std::sqrt(std::numbers::pi); }
    cplx incident_slope(double z) const { return cplx(0, k_) * incident(z); }

    double a() const { return a_; }
    double a3d() const { return b_; }
    double eps() const { return eps_; }
    cplx eta1() const { return eta1_; }
    cplx eta2() const { return eta2_; }

  private:
    double k_, a_, b_, eps_;
    cplx eta1_, eta2_;
    SeriesOptions opt_;
};

struct AxisSample
{
    cplx singular1, singular2, regular;
    cplx value; // NaN at z = +-a
};

inline AxisSample psi_axis(double z, const WaveguideParams &p, const EtaPair &e, const SeriesOptions &opt = {})
{
    detail::require_two_centers(p, "psi_axis");
    AxisWavefunction w(p, e, opt);
    AxisSample s{w.singular1(), w.singular2(), w.regular(z), cplx(std::nan(""), std::nan(""))};
    if (z != p.a_half_sep && z != -p.a_half_sep)
        s.value = w.value(z);
    return s;
}

// How the self-channel closed-mode term is taken at the impurity.
//   coincident: its value and slope at zero separation, with the
//               regularized sums' x = 0 values (consistent with G and H);
//   one_sided:  everything from the one-sided limit z -> +-a.
enum class SelfTermLimit
{
    coincident,
    one_sided
};

struct RecoveryOptions
{
    SelfTermLimit self_term = SelfTermLimit::coincident;
    double fd_step = 1e-4;
    std::array<double, 3> offsets = {1e-3, 5e-4, 2.5e-4};
};

namespace detail
{

// Value at zero of the quadratic through (x_i, y_i).
inline cplx extrapolate_to_zero(const std::array<double, 3> &x, const std::array<cplx, 3> &y)
{
    cplx r = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
    {
        double w = 1.0;
        for (std::size_t j = 0; j < 3; ++j)
            if (j != i)
                w *= x[j] / (x[j] - x[i]);
        r += w * y[i];
    }
    return r;
}

// 1/2 d^2/dz^2 [(z^2 - a^2) S] = S + 2z S' + 1/2 (z^2 - a^2) S'' for the
// part of S selected by `skip_self` (the closed-mode term centred at zc is
// left out).
inline cplx operator_value(const AxisWavefunction &w, double z, double zc, bool skip_self, double h)
{
    auto S = [&](double x) {
        cplx v = w.incident(x) + w.channel(x, w.a(), w.eta1()) + w.channel(x, -w.a(), w.eta2());
        return skip_self ? v - w.channel_closed(x, zc, zc > 0 ? w.eta1() : w.eta2()) : v;
    };
    auto dS = [&](double x) {
        cplx v = w.incident_slope(x) + w.channel_slope(x, w.a(), w.eta1()) + w.channel_slope(x, -w.a(), w.eta2());
        return skip_self ? v - w.channel_closed_slope(x, zc, zc > 0 ? w.eta1() : w.eta2()) : v;
    };
    const cplx d1 = (dS(z + h) - dS(z - h)) / (2.0 * h);
    const cplx d2 = (dS(z + 0.5 * h) - dS(z - 0.5 * h)) / h;
    const cplx ddS = (4.0 * d2 - d1) / 3.0;
    const double a = w.a();
    return S(z) + 2.0 * z * dS(z) + 0.5 * (z * z - a * a) * ddS;
}

inline cplx recover_at(const AxisWavefunction &w, double zc, const RecoveryOptions &ro, const SeriesOptions &opt)
{
    const bool coincident = ro.self_term == SelfTermLimit::coincident;
    const double side = zc > 0 ? 1.0 : -1.0;
    std::array<cplx, 3> y;
    for (std::size_t i = 0; i < 3; ++i)
        y[i] = operator_value(w, zc + side * ro.offsets[i], zc, coincident, ro.fd_step);
    cplx r = extrapolate_to_zero(ro.offsets, y);
    if (coincident)
    {
        const cplx eta = zc > 0 ? w.eta1() : w.eta2();
        const double b = w.a3d();
        const double lam0 = lambda_tilde(0.0, w.eps(), opt);
        const double f0 = f_tilde(0.0, w.eps(), opt);
        r += -0.5 * b * eta * lam0 + 2.0 * w.a() * b * eta * f0;
    }
    return r;
}

} // namespace detail

// Applies the regularization operator to the reconstructed field at both
// impurities and returns the contact strengths it finds.
inline EtaPair eta_from_wavefunction(const WaveguideParams &p, const EtaPair &e, const RecoveryOptions &ro = {},
                                     const SeriesOptions &opt = {})
{
    detail::require_two_centers(p, "eta_from_wavefunction");
    AxisWavefunction w(p, e, opt);
    const cplx r1 = detail::recover_at(w, p.a_half_sep, ro, opt);
    const cplx r2 = detail::recover_at(w, -p.a_half_sep, ro, opt);
    return EtaPair::from_components(r1, r2);
}

} // namespace cirwave

#endif
