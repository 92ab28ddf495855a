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

#include <span>
#include <vector>

#include "gaugesim/distribution.hpp"
#include "gaugesim/random.hpp"

namespace gaugesim {

/// Cumulative thresholds of a discrete distribution, as doubles; the final
/// entry is exactly 1.0 because the exact masses sum to 1.
std::vector<double> cumulative_thresholds(const std::vector<Rational>& masses);

/// Inverse-CDF draw against precomputed cumulative thresholds. Consumes
/// exactly one uniform.
std::size_t sample_index(std::span<const double> cumulative, RandomStream& stream);

/// One outcome index from a discrete distribution (one uniform).
std::size_t sample_discrete(const ParametricDistribution& dist, RandomStream& stream);

/// Pure mapping behind the circle sampler: with v, flip uniform on [0, 1),
/// returns the sample of the density |cos(point - setting)|/4.
///
/// v is inverted through the half-lobe CDF (1 + sin(theta))/2, giving theta =
/// asin(2v - 1) with density cos(theta)/2 on [-pi/2, pi/2]; the flip mirrors
/// to the opposite lobe with probability 1/2, which restores the |.|.
double circle_angle_from_uniforms(double setting, double v, double flip);

/// One point from the density |cos(point - setting)|/4 by exact inverse-CDF
/// sampling. Branch-free draw budget: exactly two uniforms per sample.
double sample_circle_angle(double setting, RandomStream& stream);

}  // namespace gaugesim
