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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gaugesim/gauge_system.hpp"

namespace gaugesim::consistency {

enum class Method { exact, quadrature, monte_carlo };

std::string method_name(Method method);

/// One expectation value; the exact rational form is present for discrete
/// systems.
struct Expectation {
    double value = 0.0;
    std::optional<Rational> exact;
};

/// The two cross-argument equalities for one ordered argument pair (x, y):
/// the mean of s_x and the mean of s_x*s_y must not depend on whether the
/// distribution of x or of y is used.
struct PairCheck {
    Argument first;   // x
    Argument second;  // y
    Expectation mean_under_first;      // E_x[s_x]
    Expectation mean_under_second;     // E_y[s_x]
    Expectation product_under_first;   // E_x[s_x s_y]
    Expectation product_under_second;  // E_y[s_x s_y]
    double delta_mean = 0.0;
    double delta_product = 0.0;
    bool pass = false;
};

struct ConsistencyReport {
    std::string model;
    Method method = Method::exact;
    double tolerance = 0.0;
    bool pass = false;
    std::vector<PairCheck> pairs;
    /// Per argument, the overall E[s_x] that Eq-style consistency defines;
    /// populated only when the report passes.
    std::vector<std::pair<Argument, Expectation>> common_means;
};

/// Parametric expectation of a product of one or two observables under
/// p_dist. Dispatches to exact summation (discrete) or breakpoint-aware
/// fixed-order quadrature (continuous; throws std::runtime_error when the
/// doubled-order estimate disagrees).
double parametric_expectation(const GaugeSystem& sys, const Argument& dist_arg,
                              std::span<const Argument> observed);

double expectation_quadrature(const ContinuousSystem& sys, const Argument& dist_arg,
                              std::span<const Argument> observed, int order = 32);

/// Monte Carlo estimate of the same expectation from n seeded samples of
/// p_dist.
double expectation_monte_carlo(const GaugeSystem& sys, const Argument& dist_arg,
                               std::span<const Argument> observed, std::size_t n,
                               std::uint64_t seed, std::uint64_t experiment = 0);

/// Evaluates both equalities over all ordered argument pairs. Default
/// tolerance: 0 for discrete systems (exact), 1e-9 for quadrature.
ConsistencyReport verify(const GaugeSystem& sys, std::span<const Argument> arguments,
                         std::optional<double> tolerance = std::nullopt);

/// Same pair checks, but every expectation is a Monte Carlo estimate.
/// Default tolerance: 4*sqrt(2/n) (four sigma for the difference of two
/// unit-variance estimates).
ConsistencyReport verify_monte_carlo(const GaugeSystem& sys,
                                     std::span<const Argument> arguments, std::size_t n,
                                     std::uint64_t seed,
                                     std::optional<double> tolerance = std::nullopt);

}  // namespace gaugesim::consistency
