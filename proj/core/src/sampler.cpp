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

#include "gaugesim/sampler.hpp"

#include <algorithm>
#include <cmath>

#include "gaugesim/angles.hpp"

namespace gaugesim {

std::vector<double> cumulative_thresholds(const std::vector<Rational>& masses) {
    std::vector<double> cumulative;
    cumulative.reserve(masses.size());
    Rational partial(0);
    for (const Rational& mass : masses) {
        partial += mass;
        cumulative.push_back(partial.to_double());
    }
    return cumulative;
}

std::size_t sample_index(std::span<const double> cumulative, RandomStream& stream) {
    const double v = stream.next_uniform();
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), v);
    // v < 1.0 == cumulative.back(), so `it` cannot be end().
    return static_cast<std::size_t>(it - cumulative.begin());
}

std::size_t sample_discrete(const ParametricDistribution& dist, RandomStream& stream) {
    const std::vector<double> cumulative = cumulative_thresholds(dist.masses());
    return sample_index(cumulative, stream);
}

double circle_angle_from_uniforms(double setting, double v, double flip) {
    const double theta = std::asin(2.0 * v - 1.0);
    const double mirrored = flip < 0.5 ? theta : theta + std::numbers::pi;
    return wrap_angle(setting + mirrored);
}

double sample_circle_angle(double setting, RandomStream& stream) {
    const double v = stream.next_uniform();
    const double flip = stream.next_uniform();
    return circle_angle_from_uniforms(setting, v, flip);
}

}  // namespace gaugesim
