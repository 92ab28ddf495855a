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

#include <functional>
#include <span>
#include <vector>

namespace gaugesim {

/// Gauss-Legendre nodes and weights on [-1, 1], computed once per order by
/// Newton iteration on the Legendre recurrence (accurate to ~1 ulp).
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    static const GaussLegendreRule& of_order(int order);
};

/// Fixed-order quadrature of f over [a, b].
double integrate_interval(const std::function<double(double)>& f, double a, double b,
                          int order = 32);

/// Integral of f over one full turn of the circle. The integrands met here
/// carry |cos| kinks and sign jumps, so the caller must declare where the
/// smooth pieces meet; each piece between consecutive (wrapped, sorted)
/// breakpoints is handled by a single fixed-order rule. With no breakpoints
/// the whole of [0, 2pi) is one piece.
double integrate_circle(const std::function<double(double)>& f,
                        std::span<const double> breakpoints, int order = 32);

/// Same, but re-evaluates at twice the node count and throws
/// std::runtime_error if the two estimates disagree by more than
/// `stability`. Disagreement means a kink or jump was not declared.
double integrate_circle_checked(const std::function<double(double)>& f,
                                std::span<const double> breakpoints, int order = 32,
                                double stability = 1e-10);

/// Sorted, deduplicated breakpoint list reduced to [0, 2pi).
std::vector<double> normalize_breakpoints(std::span<const double> breakpoints);

}  // namespace gaugesim
