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

#ifndef CIRWAVE_TESTS_TEST_UTIL_HPP
#define CIRWAVE_TESTS_TEST_UTIL_HPP

#include <cirwave/cirwave.hpp>

#include <gtest/gtest.h>

#include <functional>

namespace testutil
{

// Runs `fn` and returns the code of the cirwave::Error it throws.
inline std::optional<cirwave::ErrorCode> code_of(const std::function<void()> &fn)
{
    try
    {
        fn();
    }
    catch (const cirwave::Error &e)
    {
        return e.code();
    }
    return std::nullopt;
}

inline double rel(cirwave::cplx a, cirwave::cplx b)
{
    const double s = std::max(std::abs(a), std::abs(b));
    return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

} // namespace testutil

#define EXPECT_CIR_ERROR(stmt, expected) EXPECT_EQ(testutil::code_of([&] { (void)(stmt); }), (expected))

#endif
