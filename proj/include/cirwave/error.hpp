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

#ifndef CIRWAVE_ERROR_HPP
#define CIRWAVE_ERROR_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace cirwave
{

enum class ErrorCode
{
    OutOfBand,
    NegativeSeparation,
    NonFinite,
    DomainError,
    NonConvergence,
    SingleCenterInput,
    IllConditioned,
    UnitarityViolation,
    AtResonance,
    SingularMatrix,
    DegeneratePrefactor,
    NotBracketed,
    ConfigError,
    ParseError,
    UnknownFigure
};

inline const char *to_string(ErrorCode c)
{
    switch (c)
    {
    case ErrorCode::OutOfBand:
        return "OutOfBand";
    case ErrorCode::NegativeSeparation:
        return "NegativeSeparation";
    case ErrorCode::NonFinite:
        return "NonFinite";
    case ErrorCode::DomainError:
        return "DomainError";
    case ErrorCode::NonConvergence:
        return "NonConvergence";
    case ErrorCode::SingleCenterInput:
        return "SingleCenterInput";
    case ErrorCode::IllConditioned:
        return "IllConditioned";
    case ErrorCode::UnitarityViolation:
        return "UnitarityViolation";
    case ErrorCode::AtResonance:
        return "AtResonance";
    case ErrorCode::SingularMatrix:
        return "SingularMatrix";
    case ErrorCode::DegeneratePrefactor:
        return "DegeneratePrefactor";
    case ErrorCode::NotBracketed:
        return "NotBracketed";
    case ErrorCode::ConfigError:
        return "ConfigError";
    case ErrorCode::ParseError:
        return "ParseError";
    case ErrorCode::UnknownFigure:
        return "UnknownFigure";
    }
    return "Unknown";
}

// Every failure raised by the library. `diagnostic` carries the offending
// magnitude where one exists (denominator size, discriminant, residual),
// NaN otherwise.
class Error : public std::runtime_error
{
  public:
    Error(ErrorCode code, const std::string &what, double diagnostic = std::nan(""))
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), diagnostic_(diagnostic)
    {
    }

    ErrorCode code() const noexcept { return code_; }
    double diagnostic() const noexcept { return diagnostic_; }

  private:
    ErrorCode code_;
    double diagnostic_;
};

// True for failures that signal a numerical breakdown rather than bad input.
inline bool is_numerical(ErrorCode c)
{
    return c == ErrorCode::NonConvergence || c == ErrorCode::IllConditioned || c == ErrorCode::UnitarityViolation ||
           c == ErrorCode::AtResonance || c == ErrorCode::SingularMatrix || c == ErrorCode::DegeneratePrefactor ||
           c == ErrorCode::NotBracketed;
}

} // namespace cirwave

#endif
