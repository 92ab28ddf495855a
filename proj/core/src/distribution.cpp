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

#include "gaugesim/distribution.hpp"

#include <cmath>
#include <stdexcept>

#include "gaugesim/quadrature.hpp"

namespace gaugesim {

ParametricDistribution ParametricDistribution::discrete(std::vector<Rational> masses) {
    if (masses.empty())
        throw std::invalid_argument("ParametricDistribution: empty outcome set");
    Rational total(0);
    for (const Rational& mass : masses) {
        if (mass < Rational(0))
            throw std::invalid_argument("ParametricDistribution: negative mass");
        total += mass;
    }
    if (total != Rational(1))
        throw std::invalid_argument("ParametricDistribution: masses sum to " + total.to_string() +
                                    ", expected 1");
    return ParametricDistribution(std::move(masses));
}

ParametricDistribution ParametricDistribution::circle(CircleDensity density) {
    if (!density.pdf)
        throw std::invalid_argument("ParametricDistribution: null density");
    const double integral = integrate_circle(density.pdf, density.breakpoints);
    if (std::abs(integral - 1.0) > 1e-10)
        throw std::invalid_argument("ParametricDistribution: density integrates to " +
                                    std::to_string(integral) + ", expected 1");
    return ParametricDistribution(std::move(density));
}

const std::vector<Rational>& ParametricDistribution::masses() const {
    if (!is_discrete())
        throw std::logic_error("ParametricDistribution: not discrete");
    return std::get<std::vector<Rational>>(repr_);
}

const CircleDensity& ParametricDistribution::density() const {
    if (is_discrete())
        throw std::logic_error("ParametricDistribution: not continuous");
    return std::get<CircleDensity>(repr_);
}

ParametricDistribution mix(const ParametricDistribution& p1, const ParametricDistribution& p2,
                           const Rational& weight) {
    if (weight < Rational(0) || weight > Rational(1))
        throw std::invalid_argument("mix: weight outside [0, 1]");
    if (p1.is_discrete() != p2.is_discrete())
        throw std::invalid_argument("mix: mismatched outcome spaces");

    if (p1.is_discrete()) {
        const auto& a = p1.masses();
        const auto& b = p2.masses();
        if (a.size() != b.size())
            throw std::invalid_argument("mix: mismatched outcome set sizes");
        const Rational complement = Rational(1) - weight;
        std::vector<Rational> mixed(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            mixed[i] = weight * a[i] + complement * b[i];
        return ParametricDistribution::discrete(std::move(mixed));
    }

    const double w = weight.to_double();
    const CircleDensity& da = p1.density();
    const CircleDensity& db = p2.density();
    CircleDensity mixed;
    mixed.pdf = [w, fa = da.pdf, fb = db.pdf](double angle) {
        return w * fa(angle) + (1.0 - w) * fb(angle);
    };
    mixed.breakpoints = da.breakpoints;
    mixed.breakpoints.insert(mixed.breakpoints.end(), db.breakpoints.begin(),
                             db.breakpoints.end());
    mixed.breakpoints = normalize_breakpoints(mixed.breakpoints);
    return ParametricDistribution::circle(std::move(mixed));
}

}  // namespace gaugesim
