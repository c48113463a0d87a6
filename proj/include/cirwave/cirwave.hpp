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

#ifndef CIRWAVE_HPP
#define CIRWAVE_HPP

#include <cirwave/cir.hpp>
#include <cirwave/effective1d.hpp>
#include <cirwave/error.hpp>
#include <cirwave/params.hpp>
#include <cirwave/regsums.hpp>
#include <cirwave/scattering.hpp>
#include <cirwave/sweep.hpp>
#include <cirwave/verify.hpp>
#include <cirwave/wavefield.hpp>

#endif
