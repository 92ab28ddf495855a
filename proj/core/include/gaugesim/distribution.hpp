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
#include <variant>
#include <vector>

#include "gaugesim/rational.hpp"

namespace gaugesim {

/// A density on the unit circle given as a callable plus the angles where
/// its smooth pieces meet (kinks of |cos| factors); quadrature integrates
/// piece by piece between them.
struct CircleDensity {
    std::function<double(double)> pdf;
    std::vector<double> breakpoints;
};

/// Probability distribution over a basic outcome set: exact rational masses
/// on a finite set, or a density on the unit circle.
///
/// Invariants are enforced at construction: discrete masses are nonnegative
/// and sum to exactly 1 (checked in rational arithmetic); densities are
/// normalized to 1 within 1e-10 (checked by quadrature).
class ParametricDistribution {
public:
    static ParametricDistribution discrete(std::vector<Rational> masses);
    static ParametricDistribution circle(CircleDensity density);

    bool is_discrete() const { return std::holds_alternative<std::vector<Rational>>(repr_); }

    std::size_t size() const { return masses().size(); }
    const std::vector<Rational>& masses() const;
    const CircleDensity& density() const;

    double density_at(double angle) const { return density().pdf(angle); }

private:
    explicit ParametricDistribution(std::vector<Rational> masses) : repr_(std::move(masses)) {}
    explicit ParametricDistribution(CircleDensity density) : repr_(std::move(density)) {}

    std::variant<std::vector<Rational>, CircleDensity> repr_;
};

/// Pointwise mixture weight*p1 + (1-weight)*p2. Exact in the discrete case
/// (the weight is a rational), within roundoff for densities. The two
/// operands must be over the same outcome space.
ParametricDistribution mix(const ParametricDistribution& p1, const ParametricDistribution& p2,
                           const Rational& weight);

}  // namespace gaugesim
