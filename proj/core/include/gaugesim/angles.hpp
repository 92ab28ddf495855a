/*
 * Copyright 2026 The gaugesim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cmath>
#include <numbers>
#include <string>

namespace gaugesim {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Canonical reduction of an angle to [0, 2pi). Every piece of the library
/// (densities, observables, samplers, quadrature) goes through this one
/// helper so branch cuts cannot disagree.
inline double wrap_angle(double x) {
    double r = std::fmod(x, two_pi);
    if (r < 0.0) r += two_pi;
    if (r >= two_pi) r = 0.0;  // fmod of a tiny negative can round up to 2pi
    return r;
}

/// sign(x) with the tie sign(0) = +1. cos(lambda - u) = 0 only on a
/// measure-zero set, but the observable must still be a total function.
inline int sign_plus(double x) { return x >= 0.0 ? +1 : -1; }

/// Parses an angle given either as decimal radians ("0.785") or as a
/// fraction of pi ("pi", "pi/4", "3pi/4", "-pi/2", "0.5pi").
/// Throws std::invalid_argument on malformed input.
double parse_angle(const std::string& text);

/// Compact text form used in CSV headers and JSON reports: multiples of
/// pi/12 render as "pi/4"-style fractions, anything else as shortest
/// round-trip decimal.
std::string format_angle(double radians);

}  // namespace gaugesim
