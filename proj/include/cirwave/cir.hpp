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

#ifndef CIRWAVE_CIR_HPP
#define CIRWAVE_CIR_HPP

#include <cirwave/error.hpp>
#include <cirwave/params.hpp>
#include <cirwave/regsums.hpp>
#include <cirwave/scattering.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cirwave
{

struct TotalRoots
{
    std::optional<double> plus, minus; // larger / smaller root of the quadratic
    double discriminant = 0.0;         // radicand; roots absent when negative
};

struct CirSolutions
{
    std::optional<double> total_plus, total_minus;
    double discriminant = 0.0;
    double even = 0.0;
    std::optional<double> odd;  // absent for a single center
    std::optional<double> dual; // absent when the prefactor degenerates
};

namespace detail
{
struct CirTerms
{
    lreal k, a, eps, al, be, ga, th, s2, c2;

    CirTerms(const WaveguideParams &p, const RegularizedSums &s)
        : k(p.ka_perp), a(p.a_half_sep), eps(epsilon(p)), al(s.alpha), be(s.beta), ga(s.gamma), th(k * a),
          s2(std::sin(2.0L * th)), c2(std::cos(2.0L * th))
    {
    }
};
} // namespace detail

// Both roots of 1 + f_e + f_o = 0 in a_perp/a_3D.
inline TotalRoots cir_total(const WaveguideParams &p, const RegularizedSums &s)
{
    detail::require_two_centers(p, "cir_total");
    const detail::CirTerms t(p, s);
    const auto disc = t.be * t.be / 4.0L - t.be * t.s2 / t.k + 4.0L * t.a * t.a * (1.0L + t.ga * t.ga) -
                      2.0L * t.a * t.be * (t.ga + t.c2) + 4.0L * t.a * t.ga / t.k * (t.s2 + 2.0L * t.th * t.c2);
    const auto base = -t.al / 2.0L + 2.0L * t.a * (1.0L - t.eps);
    TotalRoots r;
    r.discriminant = static_cast<double>(disc);
    if (disc >= 0.0L)
    {
        const auto root = std::sqrt(disc);
        r.plus = static_cast<double>(base + root);
        r.minus = static_cast<double>(base - root);
    }
    return r;
}

// Zero of T_e. Valid down to a = 0, where it reduces to -zeta(1/2, 1+eps).
inline double cir_even(const WaveguideParams &p, const RegularizedSums &s)
{
    const detail::CirTerms t(p, s);
    const auto c = std::cos(t.th);
    const auto s2k = t.a == 0.0L ? 0.0L : t.s2 / t.k;
    return static_cast<double>(-(t.al + t.be) / 2.0L + s2k + 4.0L * t.a * c * c + 2.0L * t.a * (t.ga - t.eps));
}

// Zero of T_o.
inline double cir_odd(const WaveguideParams &p, const RegularizedSums &s)
{
    detail::require_two_centers(p, "cir_odd");
    const detail::CirTerms t(p, s);
    const auto sn = std::sin(t.th);
    return static_cast<double>(-(t.al - t.be) / 2.0L - t.s2 / t.k + 4.0L * t.a * sn * sn -
                               2.0L * t.a * (t.ga + t.eps));
}

// Zero of R (complete transmission).
inline double cir_dual(const WaveguideParams &p, const RegularizedSums &s, double floor = 1e-12)
{
    detail::require_two_centers(p, "cir_dual");
    const detail::CirTerms t(p, s);
    const auto pre = t.c2 - 2.0L * t.th * t.s2;
    if (std::abs(pre) < floor)
        throw Error(ErrorCode::DegeneratePrefactor, "cos(2ka) - 2ka sin(2ka) vanishes", static_cast<double>(pre));
    const auto num = (4.0L * t.k * t.a * t.a * (t.eps - 1.0L) + t.k * t.a * t.al) * t.s2 - t.s2 / t.k -
                     (t.al * t.c2 - t.be) / 2.0L - 2.0L * t.a * (t.eps * t.c2 + t.ga);
    return static_cast<double>(num / pre);
}

inline CirSolutions cir_solutions(const WaveguideParams &raw, const SeriesOptions &opt = {})
{
    const WaveguideParams p = validate(raw);
    const RegularizedSums s = sums_for(p, opt);
    CirSolutions c;
    c.even = cir_even(p, s);
    if (p.single_center())
    {
        c.total_plus = c.even;
        return c;
    }
    const TotalRoots tr = cir_total(p, s);
    c.total_plus = tr.plus;
    c.total_minus = tr.minus;
    c.discriminant = tr.discriminant;
    c.odd = cir_odd(p, s);
    try
    {
        c.dual = cir_dual(p, s);
    }
    catch (const Error &e)
    {
        if (e.code() != ErrorCode::DegeneratePrefactor)
            throw;
    }
    return c;
}

enum class ExtremumKind
{
    t_tot_min,
    t_tot_max,
    t_e_min,
    t_o_min,
    r_zero
};

inline const char *to_string(ExtremumKind k)
{
    switch (k)
    {
    case ExtremumKind::t_tot_min:
        return "t_tot_min";
    case ExtremumKind::t_tot_max:
        return "t_tot_max";
    case ExtremumKind::t_e_min:
        return "t_e_min";
    case ExtremumKind::t_o_min:
        return "t_o_min";
    case ExtremumKind::r_zero:
        return "r_zero";
    }
    return "?";
}

struct ExtremaOptions
{
    std::size_t base_points = 400;
    double log_jump = 0.5;          // refine while |d ln T| between neighbours exceeds this
    std::size_t max_points = 200000;
    double ratio_tolerance = 1e-13; // relative to 1 + |ratio|
    double flat_level = 1e-11;      // |d ln T| treated as roundoff
};

namespace detail
{

class RatioScan
{
  public:
    RatioScan(const WaveguideParams &p, const SeriesOptions &opt) : p_(validate(p)), s_(sums_for(p_, opt))
    {
        require_two_centers(p_, "find_extrema_numeric");
    }

    AmplitudePair at(double q) const { return amplitudes_closed(p_.with_ratio(q), s_); }

    double abs_t_tot(double q) const
    {
        const auto f = at(q);
        return std::abs(1.0 + f.f_e + f.f_o);
    }

  private:
    WaveguideParams p_;
    RegularizedSums s_;
};

inline double bisect_sign(const std::function<double(double)> &h, double lo, double hi, double tol)
{
    double hlo = h(lo);
    for (int it = 0; it < 400; ++it)
    {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi || hi - lo <= tol * (1.0 + std::abs(mid)))
            break;
        const double hm = h(mid);
        if (hm == 0.0)
            return mid;
        if ((hm < 0.0) == (hlo < 0.0))
        {
            lo = mid;
            hlo = hm;
        }
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

inline double golden_min(const std::function<double(double)> &g, double lo, double hi, double tol)
{
    const double r = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
    double g1 = g(x1), g2 = g(x2);
    for (int it = 0; it < 400 && hi - lo > tol * (1.0 + std::abs(x1)); ++it)
    {
        if (g1 <= g2)
        {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - r * (hi - lo);
            g1 = g(x1);
        }
        else
        {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + r * (hi - lo);
            g2 = g(x2);
        }
    }
    return g1 <= g2 ? x1 : x2;
}

inline std::vector<double> sign_roots(const std::function<double(double)> &h, double lo, double hi,
                                      const ExtremaOptions &eo)
{
    std::vector<double> roots;
    const std::size_t n = eo.base_points;
    double prev_q = lo, prev_h = h(lo);
    for (std::size_t i = 1; i <= n; ++i)
    {
        const double q = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
        const double hq = h(q);
        if (prev_h == 0.0)
            roots.push_back(prev_q);
        else if (hq != 0.0 && (hq < 0.0) != (prev_h < 0.0))
            roots.push_back(bisect_sign(h, prev_q, q, eo.ratio_tolerance));
        prev_q = q;
        prev_h = hq;
    }
    return roots;
}

} // namespace detail

// Locates transmission extrema / reflection zeros on [lo, hi] in a_perp/a_3D
// directly from the amplitude curves.
//   t_e_min, t_o_min, r_zero: bracketed by a sign change of Im f_e, Im f_o,
//     Im(f_e conj f_o) and bisected;
//   t_tot_min / t_tot_max: adaptive grid refined where ln T_tot jumps, then
//     golden-section on |1 + f_e + f_o| (or -T_tot).
inline std::vector<double> find_extrema_numeric(const WaveguideParams &p, double lo, double hi, ExtremumKind kind,
                                                const SeriesOptions &opt = {}, const ExtremaOptions &eo = {})
{
    if (!(lo < hi))
        throw Error(ErrorCode::DomainError, "empty ratio interval");
    const detail::RatioScan scan(p, opt);

    auto im_fe = [&](double q) { return scan.at(q).f_e.imag(); };
    auto im_fo = [&](double q) { return scan.at(q).f_o.imag(); };
    auto im_r = [&](double q) {
        const auto f = scan.at(q);
        return (f.f_e * std::conj(f.f_o)).imag();
    };

    std::vector<double> out;
    switch (kind)
    {
    case ExtremumKind::t_e_min:
        for (double q : detail::sign_roots(im_fe, lo, hi, eo))
            if (scan.at(q).f_e.real() < -0.5)
                out.push_back(q);
        break;
    case ExtremumKind::t_o_min:
        for (double q : detail::sign_roots(im_fo, lo, hi, eo))
            if (scan.at(q).f_o.real() < -0.5)
                out.push_back(q);
        break;
    case ExtremumKind::r_zero:
        out = detail::sign_roots(im_r, lo, hi, eo);
        break;
    case ExtremumKind::t_tot_min:
    case ExtremumKind::t_tot_max: {
        std::vector<double> grid;
        for (std::size_t i = 0; i <= eo.base_points; ++i)
            grid.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(eo.base_points));
        // Narrow features sit next to the parity resonances; seed around them.
        std::vector<double> seeds;
        for (auto &h : {std::function<double(double)>(im_fe), std::function<double(double)>(im_fo),
                        std::function<double(double)>(im_r)})
            for (double q : detail::sign_roots(h, lo, hi, eo))
                seeds.push_back(q);
        for (double q : seeds)
            for (double w = 1e-12 * (1.0 + std::abs(q)); w < hi - lo; w *= 4.0)
                for (double x : {q - w, q, q + w})
                    if (x > lo && x < hi)
                        grid.push_back(x);
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

        auto logt = [&](double q) { return 2.0 * std::log(std::max(scan.abs_t_tot(q), 1e-150)); };
        std::vector<double> lt(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
            lt[i] = logt(grid[i]);
        bool changed = true;
        while (changed && grid.size() < eo.max_points)
        {
            changed = false;
            std::vector<double> g2{grid[0]}, l2{lt[0]};
            for (std::size_t i = 1; i < grid.size(); ++i)
            {
                const double a = grid[i - 1], b = grid[i];
                if (std::abs(lt[i] - lt[i - 1]) > eo.log_jump && b - a > 1e-12 * (1.0 + std::abs(a)))
                {
                    const double m = 0.5 * (a + b);
                    g2.push_back(m);
                    l2.push_back(logt(m));
                    changed = true;
                }
                g2.push_back(b);
                l2.push_back(lt[i]);
            }
            grid.swap(g2);
            lt.swap(l2);
        }

        // Steps below the roundoff level of ln T are treated as flat so that
        // noise on a plateau does not register as an extremum.
        const bool want_min = kind == ExtremumKind::t_tot_min;
        int last_sign = 0;
        std::size_t last_step = 0;
        for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        {
            const double d = lt[i + 1] - lt[i];
            const int sg = std::abs(d) <= eo.flat_level * (1.0 + std::abs(lt[i])) ? 0 : (d > 0 ? 1 : -1);
            if (sg == 0)
                continue;
            if (last_sign != 0 && sg != last_sign)
            {
                const double a = grid[last_step], b = grid[i + 1];
                if (want_min && last_sign < 0)
                    out.push_back(
                        detail::golden_min([&](double q) { return scan.abs_t_tot(q); }, a, b, eo.ratio_tolerance));
                else if (!want_min && last_sign > 0)
                    out.push_back(
                        detail::golden_min([&](double q) { return -scan.abs_t_tot(q); }, a, b, eo.ratio_tolerance));
            }
            last_sign = sg;
            last_step = i;
        }
        std::vector<double> merged;
        for (double q : out)
            if (merged.empty() || std::abs(q - merged.back()) > 1e-9 * (1.0 + std::abs(q)))
                merged.push_back(q);
        out.swap(merged);
        break;
    }
    }
    if (out.empty())
        throw Error(ErrorCode::NotBracketed, std::string("no ") + to_string(kind) + " feature in range");
    return out;
}

} // namespace cirwave

#endif
