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
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gaugesim/gauge_system.hpp"

namespace gaugesim::spacetime {

inline constexpr double never = std::numeric_limits<double>::infinity();

/// Law of the trial point's delay from station 1, over [0, total].
/// All laws are sampled by inverse CDF so the per-pair draw budget is fixed.
class IgnitionLaw {
public:
    enum class Kind { uniform, fixed, triangular };

    static IgnitionLaw uniform() { return IgnitionLaw(Kind::uniform, 0.0); }
    static IgnitionLaw fixed(double delay1) { return IgnitionLaw(Kind::fixed, delay1); }
    static IgnitionLaw triangular() { return IgnitionLaw(Kind::triangular, 0.0); }

    /// "uniform" | "fixed:<delay>" | "triangular"
    static IgnitionLaw parse(const std::string& text);
    std::string display() const;

    Kind kind() const { return kind_; }
    double sample(double total, RandomStream& stream) const;

private:
    IgnitionLaw(Kind kind, double fixed_delay) : kind_(kind), fixed_delay_(fixed_delay) {}

    Kind kind_;
    double fixed_delay_;
};

/// How the two stations choose their arguments for each pair: both fixed, or
/// each drawn independently and uniformly from a small choice set.
class ArgumentPolicy {
public:
    static ArgumentPolicy fixed(Argument station1, Argument station2);
    static ArgumentPolicy random_choice(std::vector<Argument> choices);

    bool is_fixed() const { return fixed_; }
    const std::vector<Argument>& arguments() const { return arguments_; }

    /// Per-pair draw; returns indices into arguments(). Fixed policies
    /// consume no uniforms.
    std::pair<std::size_t, std::size_t> draw(RandomStream& stream) const;

private:
    ArgumentPolicy(bool fixed, std::vector<Argument> arguments)
        : fixed_(fixed), arguments_(std::move(arguments)) {}

    bool fixed_;
    std::vector<Argument> arguments_;
};

/// Timing and wiring of the idealized two-station run: photons arrive at
/// both stations at arrival_time, each station's argument then travels to
/// the trial point (delays delay1 + delay2 = total_delay), the first arrival
/// triggers the trial, and the outcome travels back. A station detects only
/// if its polarizer opened before the photon arrived and the outcome
/// returned before its shutter closed.
struct SpacetimeConfig {
    std::shared_ptr<const GaugeSystem> system;
    double total_delay = 1.0;  // station1->point delay + point->station2 delay
    IgnitionLaw ignition = IgnitionLaw::uniform();
    ArgumentPolicy arguments;
    double excitation_time = 0.0;  // bookkeeping only
    double emission_time = 0.0;    // bookkeeping only
    double open_time1 = 0.0;
    double open_time2 = 0.0;
    double arrival_time = 1.0;
    double shutter_time1 = never;
    double shutter_time2 = never;
    std::uint64_t pairs = 100000;
    std::uint64_t seed = default_seed;
    unsigned threads = 1;

    /// Throws std::invalid_argument when the timing constraints are broken
    /// (arrival before an opening, a shutter not after its opening, a
    /// negative or overlong fixed ignition delay, no system, no pairs).
    void validate() const;
};

/// Full record of one pair.
struct TrialTimeline {
    std::uint64_t pair_index;
    Argument setting1;
    Argument setting2;
    double delay1;
    double delay2;
    int winner;         // station whose argument reached the trial point first
    double trial_time;  // arrival_time + min(delay1, delay2)
    Outcome outcome;
    double return_time1;
    double return_time2;
    bool detected1;
    bool detected2;
    int observable1;  // valid only when detected1
    int observable2;  // valid only when detected2
};

struct RisetimeStats {
    double total_delay = 0.0;
    double mean_completion1 = 0.0;  // E[return_time1 - arrival]
    double mean_completion2 = 0.0;
    double mean_min_side = 0.0;
    double mean_max_side = 0.0;
    double max_completion = 0.0;  // always exactly total_delay
    std::vector<std::uint64_t> histogram;  // both sides pooled, bins over [0, total_delay]

    double bin_width() const {
        return histogram.empty() ? 0.0 : total_delay / static_cast<double>(histogram.size());
    }
};

/// Pair correlation over a subset of pairs, held as integer sums so
/// accumulation order cannot perturb it.
struct CorrelationEstimate {
    Argument first;
    Argument second;
    std::uint64_t pairs = 0;
    std::int64_t product_sum = 0;

    double correlation() const {
        return pairs == 0 ? 0.0
                          : static_cast<double>(product_sum) / static_cast<double>(pairs);
    }
};

struct ProtocolSummary {
    std::uint64_t pairs = 0;
    std::uint64_t detected1 = 0;
    std::uint64_t detected2 = 0;
    std::uint64_t both_detected = 0;
    double yield = 0.0;  // both_detected / pairs
    RisetimeStats risetime;
    /// One entry per unordered argument pair that occurred; detected counts
    /// only both-detected pairs, full counts every pair.
    std::vector<CorrelationEstimate> detected_correlations;
    std::vector<CorrelationEstimate> full_correlations;
    bool causality_ok = true;
};

struct ProtocolResult {
    ProtocolSummary summary;
    std::vector<TrialTimeline> timelines;  // only when requested
};

/// Runs the per-pair closed-form timelines (pairs are independent, so no
/// event queue is needed). Deterministic for a given (config, seed)
/// regardless of thread count.
ProtocolResult run_protocol(const SpacetimeConfig& config, bool keep_timelines = false);

/// Distribution summary of the completion offsets of existing timelines.
RisetimeStats risetime_stats(std::span<const TrialTimeline> timelines, double total_delay,
                             std::size_t bins = 64);

struct YieldPoint {
    double margin;  // shutter margin after arrival
    double yield;
};

/// Yield as a function of a symmetric shutter margin: both shutters close at
/// arrival_time + margin. With the uniform ignition law the curve is a step:
/// 0 below total_delay, 1 at or above it, because the slow side always
/// completes exactly at arrival_time + total_delay. When `one_sided` is set,
/// only station 1 gets the shutter and the partial-detection region shows.
std::vector<YieldPoint> yield_curve(const SpacetimeConfig& base,
                                    std::span<const double> margins, bool one_sided = false);

}  // namespace gaugesim::spacetime
