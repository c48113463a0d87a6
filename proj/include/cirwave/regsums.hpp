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

#ifndef CIRWAVE_REGSUMS_HPP
#define CIRWAVE_REGSUMS_HPP

#include <cirwave/detail/taylor.hpp>
#include <cirwave/error.hpp>
#include <cirwave/params.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

namespace cirwave
{

struct SeriesOptions
{
    double tolerance = 1e-13; // absolute target for every regularized sum
};

// The three channel sums shared by all amplitude and resonance formulas.
struct RegularizedSums
{
    double alpha = 0.0; // lambda_tilde(0, eps)
    double beta = 0.0;  // lambda_tilde(4a, eps)
    double gamma = 0.0; // f_tilde(4a, eps)
};

namespace detail
{

enum class SumKind
{
    Lambda, // sum exp(-x w_n) / w_n - 2/x
    F       // sum exp(-x w_n) - 2/x^2
};

// B_2, B_4, ..., B_24
inline constexpr std::array<double, 12> bernoulli_even = {
    1.0 / 6.0,          -1.0 / 30.0,      1.0 / 42.0,         -1.0 / 30.0,       5.0 / 66.0,           -691.0 / 2730.0,
    7.0 / 6.0,          -3617.0 / 510.0,  43867.0 / 798.0,    -174611.0 / 330.0, 854513.0 / 138.0,     -236364091.0 / 2730.0};

inline constexpr double em_crossover = 4.0;

// (1 - e^-y) / y
inline double phi1(double y)
{
    if (y == 0.0)
        return 1.0;
    return -std::expm1(-y) / y;
}

// ((1 + y) e^-y - 1) / y^2
inline double phi2(double y)
{
    if (y < 1.0)
    {
        double term = 1.0, sum = 0.0;
        for (int n = 2; n < 40; ++n)
        {
            term *= (n == 2 ? 0.5 : -y / n);
            const double add = -(n - 1) * term;
            sum += add;
            if (std::abs(add) < 1e-18 * std::abs(sum))
                break;
        }
        return sum;
    }
    return ((1.0 + y) * std::exp(-y) - 1.0) / (y * y);
}

inline double raw_term(SumKind kind, double x, double w)
{
    const double e = std::exp(-x * w);
    return kind == SumKind::Lambda ? e / w : e;
}

// Euler-Maclaurin evaluation with the first M-1 terms summed explicitly and
// the tail replaced by its integral plus Bernoulli corrections at t = M.
// Returns false when the correction series has not settled to `tol`.
inline bool em_attempt(SumKind kind, double x, double eps, std::size_t M, double tol, double &out)
{
    constexpr std::size_t J = bernoulli_even.size();
    constexpr std::size_t N = 2 * J;

    double head = 0.0;
    for (std::size_t n = 1; n < M; ++n)
        head += raw_term(kind, x, std::sqrt(static_cast<double>(n) + eps));

    const double w = std::sqrt(static_cast<double>(M) + eps);
    const double integral = kind == SumKind::Lambda ? -2.0 * w * phi1(x * w) : 2.0 * w * w * phi2(x * w);

    Jet<N> u = shifted_power<N>(w, 0.5);
    Jet<N> expo = exp((-x) * u);
    Jet<N> f = kind == SumKind::Lambda ? expo * shifted_power<N>(w, -0.5) : expo;

    double corr = 0.0;
    bool settled = false;
    for (std::size_t j = 1; j <= J; ++j)
    {
        const double term = bernoulli_even[j - 1] / (2.0 * static_cast<double>(j)) * f[2 * j - 1];
        corr += term;
        if (std::abs(term) < 0.1 * tol)
        {
            settled = true;
            break;
        }
    }
    out = head + integral + 0.5 * f[0] - corr;
    return settled;
}

inline double em_sum(SumKind kind, double x, double eps, double tol)
{
    std::size_t M = std::max<std::size_t>(16, static_cast<std::size_t>(std::ceil(4.0 * x * x)));
    double out = 0.0;
    for (int attempt = 0; attempt < 8; ++attempt, M *= 2)
        if (em_attempt(kind, x, eps, M, tol, out))
            return out;
    throw Error(ErrorCode::NonConvergence, "Euler-Maclaurin corrections did not settle", x);
}

// Plain summation of the raw series, truncated by the integral tail bound.
inline double direct_sum(SumKind kind, double x, double eps, double tol)
{
    if (!(x > 0.0))
        throw Error(ErrorCode::DomainError, "direct summation needs x > 0", x);
    double s = 0.0, comp = 0.0;
    for (std::size_t n = 1; n < 100000000; ++n)
    {
        const double w = std::sqrt(static_cast<double>(n) + eps);
        const double t = raw_term(kind, x, w) - comp;
        const double next = s + t;
        comp = (next - s) - t;
        s = next;
        const double e = std::exp(-x * w);
        const double tail = kind == SumKind::Lambda ? 2.0 * e / x : 2.0 * e * (1.0 + x * w) / (x * x);
        if (tail < 1e-4 * tol)
            return kind == SumKind::Lambda ? s - 2.0 / x : s - 2.0 / (x * x);
    }
    throw Error(ErrorCode::NonConvergence, "direct channel sum did not reach tolerance", x);
}

inline void check_sum_args(double x, double eps)
{
    if (!std::isfinite(x) || !std::isfinite(eps))
        throw Error(ErrorCode::NonFinite, "regularized sum arguments must be finite");
    if (x < 0.0)
        throw Error(ErrorCode::DomainError, "regularized sums need x >= 0", x);
    if (!(eps > -1.0 && eps <= 0.0))
        throw Error(ErrorCode::DomainError, "eps must lie in (-1, 0]", eps);
}

} // namespace detail

// Lambda~(x, eps) = sum_{n>=1} exp(-x sqrt(n+eps))/sqrt(n+eps) - 2/x, with
// Lambda~(0, eps) = zeta(1/2, 1+eps).
inline double lambda_tilde(double x, double eps, const SeriesOptions &opt = {})
{
    detail::check_sum_args(x, eps);
    if (x >= detail::em_crossover)
        return detail::direct_sum(detail::SumKind::Lambda, x, eps, opt.tolerance);
    return detail::em_sum(detail::SumKind::Lambda, x, eps, opt.tolerance);
}

// F~(x, eps) = sum_{n>=1} exp(-x sqrt(n+eps)) - 2/x^2 for x > 0.
// At x = 0 this returns -eps by convention; note the one-sided limit
// x -> 0+ of the sum is -1/2 - eps.
inline double f_tilde(double x, double eps, const SeriesOptions &opt = {})
{
    detail::check_sum_args(x, eps);
    if (x == 0.0)
        return -eps;
    if (x >= detail::em_crossover)
        return detail::direct_sum(detail::SumKind::F, x, eps, opt.tolerance);
    return detail::em_sum(detail::SumKind::F, x, eps, opt.tolerance);
}

// zeta(1/2, q) for q > 0 by Euler-Maclaurin on (n+q)^(-1/2) after shifting
// the argument to q + N >= 16. The remainder is bounded by the first
// omitted correction, well below 1e-15.
inline double hurwitz_zeta_half(double q)
{
    if (!std::isfinite(q) || q <= 0.0)
        throw Error(ErrorCode::DomainError, "hurwitz_zeta_half needs q > 0", q);
    const std::size_t shift = q >= 16.0 ? 0 : static_cast<std::size_t>(std::ceil(16.0 - q));
    long double head = 0.0L;
    for (std::size_t n = shift; n-- > 0;)
        head += 1.0L / std::sqrt(static_cast<long double>(n) + q);

    const long double w = static_cast<long double>(q) + static_cast<long double>(shift);
    const long double rw = 1.0L / std::sqrt(w);
    long double tail = -2.0L * std::sqrt(w) + 0.5L * rw;

    // B_2j/(2j)! * (1/2)_(2j-1) * w^(1/2 - 2j)
    long double rising = 0.5L;   // (1/2)_1
    long double fact = 2.0L;     // (2j)!
    long double power = rw / w;  // w^(-3/2)
    for (std::size_t j = 1; j <= detail::bernoulli_even.size(); ++j)
    {
        const long double term = detail::bernoulli_even[j - 1] / fact * rising * power;
        tail += term;
        if (std::abs(term) < 1e-21L)
            break;
        const long double m = 2.0L * static_cast<long double>(j) - 1.0L; // rising has m factors
        rising *= (0.5L + m) * (0.5L + m + 1.0L);
        fact *= (2.0L * j + 1.0L) * (2.0L * j + 2.0L);
        power /= w * w;
    }
    return static_cast<double>(head + tail);
}

inline RegularizedSums sums_for(const WaveguideParams &p, const SeriesOptions &opt = {})
{
    const double eps = epsilon(p);
    RegularizedSums s;
    s.alpha = lambda_tilde(0.0, eps, opt);
    if (p.a_half_sep == 0.0)
    {
        s.beta = s.alpha;
        s.gamma = -eps;
        return s;
    }
    s.beta = lambda_tilde(4.0 * p.a_half_sep, eps, opt);
    s.gamma = f_tilde(4.0 * p.a_half_sep, eps, opt);
    return s;
}

} // namespace cirwave

#endif
