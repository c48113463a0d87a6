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

#ifndef CIRWAVE_DETAIL_TAYLOR_HPP
#define CIRWAVE_DETAIL_TAYLOR_HPP

#include <array>
#include <cmath>
#include <cstddef>

namespace cirwave::detail
{

// Truncated Taylor series c[0] + c[1] d + ... + c[N-1] d^(N-1) in one
// variable d.
template <std::size_t N>
struct Jet
{
    std::array<double, N> c{};

    double operator[](std::size_t i) const { return c[i]; }
    double &operator[](std::size_t i) { return c[i]; }
};

template <std::size_t N>
Jet<N> operator*(const Jet<N> &a, const Jet<N> &b)
{
    Jet<N> r;
    for (std::size_t i = 0; i < N; ++i)
    {
        double s = 0.0;
        for (std::size_t k = 0; k <= i; ++k)
            s += a[k] * b[i - k];
        r[i] = s;
    }
    return r;
}

template <std::size_t N>
Jet<N> operator*(double s, Jet<N> a)
{
    for (auto &v : a.c)
        v *= s;
    return a;
}

// (w^2 + d)^p expanded around d = 0, for w > 0.
template <std::size_t N>
Jet<N> shifted_power(double w, double p)
{
    Jet<N> r;
    const double inv_w2 = 1.0 / (w * w);
    double coef = std::pow(w, 2.0 * p);
    for (std::size_t m = 0; m < N; ++m)
    {
        r[m] = coef;
        coef *= (p - static_cast<double>(m)) / static_cast<double>(m + 1) * inv_w2;
    }
    return r;
}

template <std::size_t N>
Jet<N> exp(const Jet<N> &s)
{
    Jet<N> e;
    e[0] = std::exp(s[0]);
    for (std::size_t m = 1; m < N; ++m)
    {
        double acc = 0.0;
        for (std::size_t k = 1; k <= m; ++k)
            acc += static_cast<double>(k) * s[k] * e[m - k];
        e[m] = acc / static_cast<double>(m);
    }
    return e;
}

} // namespace cirwave::detail

#endif
