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

// Resonance positions versus impurity separation, plus the transmission at
// the lower total resonance. Usage: sample_resonances [ka_perp]

#include <cirwave/cirwave.hpp>

#include <cstdio>
#include <cstdlib>

int main(int argc, char **argv)
{
    using namespace cirwave;
    const double k = argc > 1 ? std::atof(argv[1]) : 0.0707;

    std::printf("%8s %12s %12s %12s %12s %12s\n", "a", "total+", "total-", "even", "odd", "dual");
    for (double a : {0.0, 0.01, 0.1, 0.25, 0.5, 0.75, 1.0})
    {
        const CirSolutions c = cir_solutions(WaveguideParams::make(k, a, 1.0));
        auto show = [](const std::optional<double> &v) { return v ? *v : std::nan(""); };
        std::printf("%8.3f %12.6f %12.6f %12.6f %12.6f %12.6f\n", a, show(c.total_plus), show(c.total_minus), c.even,
                    show(c.odd), show(c.dual));
    }

    const auto c = cir_solutions(WaveguideParams::make(k, 0.5, 1.0));
    if (c.total_minus)
    {
        const double q = *c.total_minus;
        for (double dq : {-0.1, -0.01, 0.0, 0.01, 0.1})
        {
            const auto t = transmissions(amplitudes(WaveguideParams::make(k, 0.5, q + dq)));
            std::printf("a=0.5 ratio=%.6f  T_tot=%.3e  R=%.6f\n", q + dq, t.t_tot, t.r);
        }
    }
    return 0;
}
