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

#include "gaugesim/models.hpp"

#include <cmath>
#include <stdexcept>

namespace gaugesim::models {

namespace {

std::vector<std::string> six_outcomes() {
    return {"l1", "l2", "l3", "l4", "l5", "l6"};
}

std::vector<Rational> twelfths(std::initializer_list<int> numerators) {
    std::vector<Rational> masses;
    masses.reserve(numerators.size());
    for (int n : numerators) masses.emplace_back(n, 12);
    return masses;
}

std::vector<DiscreteSystem::Column> table1_columns(bool perturbed) {
    std::vector<DiscreteSystem::Column> columns(3);
    columns[0] = {"a", {+1, -1, -1, -1, +1, +1}, twelfths({3, 1, 2, 3, 1, 2})};
    columns[1] = {"b", {+1, +1, -1, -1, -1, +1},
                  perturbed ? twelfths({1, 4, 1, 4, 1, 1}) : twelfths({4, 1, 1, 4, 1, 1})};
    columns[2] = {"c", {+1, +1, +1, -1, -1, -1}, twelfths({3, 2, 1, 3, 2, 1})};
    return columns;
}

}  // namespace

std::shared_ptr<const DiscreteSystem> table1(Rational mixing, bool anticorrelated) {
    return std::make_shared<DiscreteSystem>("table1", six_outcomes(), table1_columns(false),
                                            mixing, anticorrelated);
}

std::shared_ptr<const DiscreteSystem> table1_perturbed(Rational mixing, bool anticorrelated) {
    return std::make_shared<DiscreteSystem>("table1-perturbed", six_outcomes(),
                                            table1_columns(true), mixing, anticorrelated);
}

std::shared_ptr<const CircleSystem> circle(Rational mixing, bool anticorrelated) {
    return std::make_shared<CircleSystem>(mixing, anticorrelated);
}

std::shared_ptr<const UniformCircleSystem> kolmogorov_uniform(bool anticorrelated) {
    return std::make_shared<UniformCircleSystem>(anticorrelated);
}

std::shared_ptr<const GaugeSystem> by_name(std::string_view name, Rational mixing,
                                           bool anticorrelated) {
    if (name == "table1") return table1(mixing, anticorrelated);
    if (name == "table1-perturbed") return table1_perturbed(mixing, anticorrelated);
    if (name == "circle") return circle(mixing, anticorrelated);
    if (name == "kolmogorov-uniform") return kolmogorov_uniform(anticorrelated);
    throw std::invalid_argument("unknown model '" + std::string(name) +
                                "' (known: table1, table1-perturbed, circle, "
                                "kolmogorov-uniform)");
}

std::vector<std::string> registry_names() {
    return {"table1", "table1-perturbed", "circle", "kolmogorov-uniform"};
}

Rational exact_correlation(const DiscreteSystem& sys, const Argument& u1, const Argument& u2) {
    return exact_correlation(sys, u1, u2, sys.mixing());
}

Rational exact_correlation(const DiscreteSystem& sys, const Argument& u1, const Argument& u2,
                           const Rational& mixing) {
    if (mixing < Rational(0) || mixing > Rational(1))
        throw std::invalid_argument("exact_correlation: mixing coefficient outside [0, 1]");
    const Argument observed[] = {u1, u2};
    const Rational under_first = sys.expectation_exact(u1, observed);
    const Rational under_second = sys.expectation_exact(u2, observed);
    const Rational value = mixing * under_first + (Rational(1) - mixing) * under_second;
    return sys.anticorrelated() ? -value : value;
}

double exact_correlation_circle(double a, double b) { return std::cos(a - b); }

double parametric_mean_circle(double /*measured*/, double /*dist_arg*/) { return 0.0; }

}  // namespace gaugesim::models
