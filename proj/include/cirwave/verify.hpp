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

#ifndef CIRWAVE_VERIFY_HPP
#define CIRWAVE_VERIFY_HPP

#include <cirwave/cir.hpp>
#include <cirwave/effective1d.hpp>
#include <cirwave/params.hpp>
#include <cirwave/regsums.hpp>
#include <cirwave/scattering.hpp>
#include <cirwave/wavefield.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace cirwave::check
{

// Random validated parameter point: ka log-uniform on [1e-5, 1.99],
// a log-uniform on [1e-3, 2], inv_ratio uniform on [-10, 10].
class ParamSampler
{
  public:
    explicit ParamSampler(std::uint64_t seed) : rng_(seed) {}

    WaveguideParams next()
    {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        const double k = std::exp(std::log(1e-5) + u(rng_) * (std::log(1.99) - std::log(1e-5)));
        const double a = std::exp(std::log(1e-3) + u(rng_) * (std::log(2.0) - std::log(1e-3)));
        const double q = -10.0 + 20.0 * u(rng_);
        return WaveguideParams::make(k, a, q);
    }

  private:
    std::mt19937_64 rng_;
};

struct CheckResult
{
    std::string name;
    bool passed = false;
    double measured = 0.0;
    double threshold = 0.0;
};

inline double rel_diff(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

inline CheckResult check_zeta_consistency()
{
    double worst = 0.0;
    for (int i = 0; i <= 40; ++i)
    {
        const double eps = -0.99 * i / 40.0;
        worst = std::max(worst, std::abs(lambda_tilde(0.0, eps) - hurwitz_zeta_half(1.0 + eps)));
        worst = std::max(worst, std::abs(f_tilde(0.0, eps) + eps));
    }
    return {"regularized sums at x = 0", worst <= 1e-10, worst, 1e-10};
}

inline CheckResult check_unitarity(std::size_t n, std::uint64_t seed)
{
    ParamSampler sp(seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        const auto p = sp.next();
        const auto f = amplitudes_closed(p, sums_for(p));
        const auto t = transmissions(f, 1.0);
        worst = std::max({worst, unitarity_defect(f), std::abs(t.t_tot + t.r - 1.0)});
    }
    return {"unitarity circle and flux", worst <= 1e-10, worst, 1e-10};
}

inline CheckResult check_dual_path(std::size_t n, std::uint64_t seed)
{
    ParamSampler sp(seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        const auto p = sp.next();
        const auto s = sums_for(p);
        const auto f = amplitudes_closed(p, s);
        const auto g = amplitudes_via_eta(p, eta_pair(gh_chi(p, s)));
        worst = std::max({worst, rel_diff(f.f_e, g.f_e), rel_diff(f.f_o, g.f_o)});
    }
    return {"closed form vs contact-strength route", worst <= 1e-12, worst, 1e-12};
}

inline CheckResult check_effective_1d(std::size_t n, std::uint64_t seed)
{
    ParamSampler sp(seed);
    double worst = 0.0;
    for (std::size_t done = 0; done < n;)
    {
        const auto p = sp.next();
        const auto f = amplitudes_closed(p, sums_for(p));
        if (std::abs(1.0 + f.f_e + f.f_o) <= 1e-3)
            continue;
        worst = std::max(worst, verify_roundtrip(p));
        ++done;
    }
    return {"effective 1D roundtrip", worst <= 1e-10, worst, 1e-10};
}

inline CheckResult check_resonance_substitution()
{
    double worst = 0.0;
    for (double k : {0.0707, 7.07e-5})
        for (double a : {0.01, 0.1, 0.5, 1.0})
        {
            const auto base = WaveguideParams::make(k, a, 1.0);
            const auto s = sums_for(base);
            const auto c = cir_solutions(base);
            auto at = [&](double q) { return amplitudes_closed(base.with_ratio(q), s); };
            for (auto q : {c.total_plus, c.total_minus})
                if (q)
                {
                    const auto f = at(*q);
                    worst = std::max(worst, std::abs(1.0 + f.f_e + f.f_o));
                }
            worst = std::max(worst, std::norm(1.0 + at(c.even).f_e));
            worst = std::max(worst, std::norm(1.0 + at(*c.odd).f_o));
            if (c.dual)
            {
                const auto f = at(*c.dual);
                worst = std::max(worst, std::norm(f.f_e - f.f_o));
            }
        }
    return {"resonance positions re-substituted", worst <= 1e-10, worst, 1e-10};
}

inline CheckResult check_eta_recovery()
{
    const WaveguideParams pts[] = {WaveguideParams::make(0.0707, 0.5, 2.0), WaveguideParams::make(7.07e-5, 0.1, 1.46),
                                   WaveguideParams::make(0.0707, 0.01, -1.0), WaveguideParams::make(1.3, 0.8, -2.5),
                                   WaveguideParams::make(0.5, 1.5, 0.3)};
    double worst = 0.0;
    for (const auto &p : pts)
    {
        const auto e = eta_pair(gh_chi(p, sums_for(p)));
        const auto r = eta_from_wavefunction(p, e);
        worst = std::max({worst, rel_diff(r.eta1(), e.eta1()), rel_diff(r.eta2(), e.eta2())});
    }
    return {"contact strengths from the field", worst <= 1e-6, worst, 1e-6};
}

inline CheckResult check_total_resonance_anchor()
{
    const auto c = cir_solutions(WaveguideParams::make(0.0707, 0.5, 1.0));
    const double d = std::max(std::abs(c.total_minus.value_or(1e9) - 0.42), std::abs(c.total_plus.value_or(1e9) - 3.04));
    return {"total resonances at 0.42 and 3.04", d <= 0.02, d, 0.02};
}

inline std::vector<CheckResult> run_all(std::uint64_t seed = 20260101)
{
    return {check_zeta_consistency(),   check_unitarity(2000, seed),      check_dual_path(2000, seed),
            check_effective_1d(300, seed), check_resonance_substitution(), check_eta_recovery(),
            check_total_resonance_anchor()};
}

} // namespace cirwave::check

#endif
