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

#include <cstdint>
#include <optional>

#include "gaugesim/gauge_system.hpp"

namespace gaugesim::signaling {

/// Station 1 feeds one of two arguments, drawn with the given priors, into
/// the shared trial; station 2 holds its argument fixed and only sees its
/// own observable. If the posterior of station 1's choice given that
/// observable moves away from the prior, the channel carries information.
struct ChannelExperiment {
    double prior_first = 0.5;  // probability of first_argument; the other gets 1 - prior
    Argument first_argument;
    Argument second_argument;
    Argument receiver_argument;  // u2, fixed
    std::size_t trials = 1'000'000;
    std::uint64_t seed = default_seed;
    unsigned threads = 1;
};

struct ChannelReport {
    ChannelExperiment experiment;
    bool consistent = false;  // verify() verdict for the arguments involved
    // counts[first?0:1][s2 == +1 ? 0 : 1]
    std::uint64_t counts[2][2] = {{0, 0}, {0, 0}};
    /// Relative frequency of u1 = first among trials with s2 = +1 / -1;
    /// empty when the conditioning event never occurred.
    std::optional<double> posterior_given_plus;
    std::optional<double> posterior_given_minus;
    /// Four-sigma binomial bounds sqrt(16 q(1-q)/n_cond) for each estimate.
    std::optional<double> bound_plus;
    std::optional<double> bound_minus;
    /// True when every defined posterior sits within its bound of the prior.
    bool no_signaling = false;

    std::uint64_t conditioned_plus() const { return counts[0][0] + counts[1][0]; }
    std::uint64_t conditioned_minus() const { return counts[0][1] + counts[1][1]; }
};

/// Runs the memoryless-channel experiment. Station 1's argument governs the
/// trial distribution outright (mixing fixed at 1: the most favorable case
/// for a would-be signal). The consistency verdict for the three arguments
/// involved is evaluated first and carried in the report; an inconsistent
/// system is still run, since demonstrating its posterior shift is the point
/// of the negative control.
ChannelReport run_channel(const GaugeSystem& sys, const ChannelExperiment& experiment);

}  // namespace gaugesim::signaling
