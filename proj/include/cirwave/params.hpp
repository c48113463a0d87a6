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

#ifndef CIRWAVE_PARAMS_HPP
#define CIRWAVE_PARAMS_HPP

#include <cirwave/error.hpp>

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace cirwave
{

// Units throughout: hbar = m = a_perp = 1. Every public quantity is a
// dimensionless ratio.

// Inverse scattering-length ratio a_perp/a_3D. The non-interacting limit
// (a_3D -> 0, ratio -> +-infinity) is a separate state, not a float.
class Coupling
{
  public:
    static Coupling none() { return Coupling(false, 0.0); }
    static Coupling ratio(double inv_ratio) { return Coupling(true, inv_ratio); }

    bool interacting() const noexcept { return interacting_; }

    // a_perp/a_3D. Only meaningful when interacting().
    double inv_ratio() const noexcept { return inv_ratio_; }

    // a_3D/a_perp. Zero without interaction; undefined at the unitary point.
    double a3d() const
    {
        if (!interacting_)
            return 0.0;
        if (inv_ratio_ == 0.0)
            throw Error(ErrorCode::DomainError, "a3d is infinite at inv_ratio = 0", 0.0);
        return 1.0 / inv_ratio_;
    }

  private:
    Coupling(bool on, double q) : interacting_(on), inv_ratio_(q) {}
    bool interacting_;
    double inv_ratio_;
};

struct WaveguideParams
{
    double ka_perp = 0.0;    // k a_perp, in (0, 2)
    double a_half_sep = 0.0; // a / a_perp, >= 0
    Coupling coupling = Coupling::none();

    static WaveguideParams make(double ka_perp, double a_half_sep, double inv_ratio)
    {
        return {ka_perp, a_half_sep, Coupling::ratio(inv_ratio)};
    }

    bool single_center() const noexcept { return a_half_sep == 0.0; }

    WaveguideParams with_ratio(double inv_ratio) const
    {
        WaveguideParams p = *this;
        p.coupling = Coupling::ratio(inv_ratio);
        return p;
    }
};

inline WaveguideParams validate(const WaveguideParams &raw)
{
    if (!std::isfinite(raw.ka_perp) || !std::isfinite(raw.a_half_sep) ||
        (raw.coupling.interacting() && !std::isfinite(raw.coupling.inv_ratio())))
        throw Error(ErrorCode::NonFinite, "parameters must be finite reals");
    if (!(raw.ka_perp > 0.0 && raw.ka_perp < 2.0))
        throw Error(ErrorCode::OutOfBand, "ka_perp must lie in (0, 2)", raw.ka_perp);
    if (raw.a_half_sep < 0.0)
        throw Error(ErrorCode::NegativeSeparation, "a_half_sep must be >= 0", raw.a_half_sep);
    return raw;
}

// Energy offset below the first excited transverse threshold.
inline double epsilon(double ka_perp)
{
    const double h = 0.5 * ka_perp;
    return -h * h;
}

inline double epsilon(const WaveguideParams &p) { return epsilon(p.ka_perp); }

// Evanescent momentum of closed channel n >= 1.
inline double kn(double eps, std::size_t n) { return 2.0 * std::sqrt(static_cast<double>(n) + eps); }

inline double kn(const WaveguideParams &p, std::size_t n) { return kn(epsilon(p), n); }

struct ChannelData
{
    double epsilon = 0.0;
    std::vector<double> kn; // kn[0] is channel n = 1
};

inline ChannelData channel_data(const WaveguideParams &p, std::size_t n_max)
{
    ChannelData c;
    c.epsilon = epsilon(p);
    c.kn.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n)
        c.kn.push_back(kn(c.epsilon, n));
    return c;
}

} // namespace cirwave

#endif
