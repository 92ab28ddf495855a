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

#include <memory>
#include <string_view>

#include "gaugesim/gauge_system.hpp"

namespace gaugesim::models {

/// The six-outcome demonstration system with arguments a, b, c. Its pair
/// correlations are exact rationals that break the three-correlation bound
/// while every single observable stays unbiased.
std::shared_ptr<const DiscreteSystem> table1(Rational mixing = Rational(1),
                                             bool anticorrelated = false);

/// Negative control: same system with the b-column masses of the first two
/// outcomes swapped. Masses still sum to 1, but the cross-argument
/// expectation equalities fail, so it is detectably inconsistent.
std::shared_ptr<const DiscreteSystem> table1_perturbed(Rational mixing = Rational(1),
                                                       bool anticorrelated = false);

/// Unit-circle system with density |cos(point - setting)|/4; its pair
/// correlation is cos(a - b).
std::shared_ptr<const CircleSystem> circle(Rational mixing = Rational(1),
                                           bool anticorrelated = false);

/// Classical control: argument-independent uniform distribution on the
/// circle.
std::shared_ptr<const UniformCircleSystem> kolmogorov_uniform(bool anticorrelated = false);

/// Built-in registry: "table1", "table1-perturbed", "circle",
/// "kolmogorov-uniform". Throws std::invalid_argument for unknown names.
std::shared_ptr<const GaugeSystem> by_name(std::string_view name,
                                           Rational mixing = Rational(1),
                                           bool anticorrelated = false);

std::vector<std::string> registry_names();

/// Exact pair correlation E[s1 s2] of a discrete system under the effective
/// distribution of (u1, u2); honors the anticorrelated convention.
Rational exact_correlation(const DiscreteSystem& sys, const Argument& u1, const Argument& u2);
Rational exact_correlation(const DiscreteSystem& sys, const Argument& u1, const Argument& u2,
                           const Rational& mixing);

/// Closed-form pair correlation of the circle model: cos(a - b). Serves as
/// the oracle against quadrature and Monte Carlo.
double exact_correlation_circle(double a, double b);

/// Closed-form parametric mean of a single circle observable: 0 for every
/// (measured, distribution) argument pair, because the integrand
/// sign(cos(point - measured)) * density(dist_arg, point) is antiperiodic
/// over half a turn.
double parametric_mean_circle(double measured, double dist_arg);

}  // namespace gaugesim::models
