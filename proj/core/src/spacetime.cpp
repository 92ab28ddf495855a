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

#include "gaugesim/spacetime.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gaugesim/parallel.hpp"

namespace gaugesim::spacetime {

// ---------------------------------------------------------------------------
// IgnitionLaw

IgnitionLaw IgnitionLaw::parse(const std::string& text) {
    if (text == "uniform") return uniform();
    if (text == "triangular") return triangular();
    if (text.rfind("fixed:", 0) == 0) {
        std::size_t consumed = 0;
        const double delay = std::stod(text.substr(6), &consumed);
        if (consumed != text.size() - 6)
            throw std::invalid_argument("IgnitionLaw: bad fixed delay in '" + text + "'");
        return fixed(delay);
    }
    throw std::invalid_argument("IgnitionLaw: unknown law '" + text +
                                "' (known: uniform, fixed:<delay>, triangular)");
}

std::string IgnitionLaw::display() const {
    switch (kind_) {
        case Kind::uniform: return "uniform";
        case Kind::triangular: return "triangular";
        case Kind::fixed: {
            char buffer[32];
            std::snprintf(buffer, sizeof buffer, "fixed:%g", fixed_delay_);
            return buffer;
        }
    }
    return "unknown";
}

double IgnitionLaw::sample(double total, RandomStream& stream) const {
    switch (kind_) {
        case Kind::fixed:
            return fixed_delay_;
        case Kind::uniform:
            return total * stream.next_uniform();
        case Kind::triangular: {
            // Symmetric triangular on [0, total], peak at the midpoint.
            const double v = stream.next_uniform();
            return v < 0.5 ? total * std::sqrt(v / 2.0)
                           : total * (1.0 - std::sqrt((1.0 - v) / 2.0));
        }
    }
    return 0.0;
}

// ---------------------------------------------------------------------------
// ArgumentPolicy

ArgumentPolicy ArgumentPolicy::fixed(Argument station1, Argument station2) {
    return ArgumentPolicy(true, {std::move(station1), std::move(station2)});
}

ArgumentPolicy ArgumentPolicy::random_choice(std::vector<Argument> choices) {
    if (choices.size() < 2)
        throw std::invalid_argument("ArgumentPolicy: need at least two choices");
    return ArgumentPolicy(false, std::move(choices));
}

std::pair<std::size_t, std::size_t> ArgumentPolicy::draw(RandomStream& stream) const {
    if (fixed_) return {0, 1};
    const auto pick = [this, &stream]() {
        const auto count = static_cast<double>(arguments_.size());
        auto index = static_cast<std::size_t>(stream.next_uniform() * count);
        return std::min(index, arguments_.size() - 1);
    };
    const std::size_t first = pick();
    const std::size_t second = pick();
    return {first, second};
}

// ---------------------------------------------------------------------------
// SpacetimeConfig

void SpacetimeConfig::validate() const {
    if (!system)
        throw std::invalid_argument("SpacetimeConfig: no gauge system");
    if (!(total_delay > 0.0) || !std::isfinite(total_delay))
        throw std::invalid_argument("SpacetimeConfig: total_delay must be positive");
    if (pairs == 0)
        throw std::invalid_argument("SpacetimeConfig: need at least one pair");
    if (arrival_time < open_time1 || arrival_time < open_time2)
        throw std::invalid_argument(
            "SpacetimeConfig: photons must arrive at or after both openings");
    if (shutter_time1 != never && !(shutter_time1 > open_time1))
        throw std::invalid_argument("SpacetimeConfig: shutter 1 must close after opening 1");
    if (shutter_time2 != never && !(shutter_time2 > open_time2))
        throw std::invalid_argument("SpacetimeConfig: shutter 2 must close after opening 2");
    if (ignition.kind() == IgnitionLaw::Kind::fixed) {
        RandomStream probe(0, 0);
        const double delay = ignition.sample(total_delay, probe);
        if (delay < 0.0 || delay > total_delay)
            throw std::invalid_argument(
                "SpacetimeConfig: fixed ignition delay outside [0, total_delay]");
    }
    for (const Argument& u : arguments.arguments()) system->validate_argument(u);
}

// ---------------------------------------------------------------------------
// run_protocol

namespace {

constexpr std::size_t histogram_bins = 64;

struct ChunkStats {
    std::uint64_t detected1 = 0;
    std::uint64_t detected2 = 0;
    std::uint64_t both = 0;
    double sum_completion1 = 0.0;
    double sum_completion2 = 0.0;
    double sum_min_side = 0.0;
    double sum_max_side = 0.0;
    double max_completion = 0.0;
    bool causality_ok = true;
    std::vector<std::uint64_t> histogram = std::vector<std::uint64_t>(histogram_bins, 0);
    // Indexed by unordered argument-index pair (i <= j): i * K + j.
    std::vector<std::uint64_t> full_counts;
    std::vector<std::int64_t> full_sums;
    std::vector<std::uint64_t> detected_counts;
    std::vector<std::int64_t> detected_sums;
};

TrialTimeline simulate_pair(const SpacetimeConfig& cfg, std::uint64_t pair_index) {
    const GaugeSystem& sys = *cfg.system;
    RandomStream stream(cfg.seed, substream(0, pair_index));

    const auto [index1, index2] = cfg.arguments.draw(stream);
    const Argument& setting1 = cfg.arguments.arguments()[index1];
    const Argument& setting2 = cfg.arguments.arguments()[index2];

    const double delay1 = cfg.ignition.sample(cfg.total_delay, stream);
    const double delay2 = cfg.total_delay - delay1;

    int winner;
    if (delay1 < delay2)
        winner = 1;
    else if (delay2 < delay1)
        winner = 2;
    else
        winner = stream.next_uniform() < 0.5 ? 1 : 2;  // fair coin on an exact tie

    // The first argument to reach the trial point governs the draw; the
    // later one is discarded entirely.
    const Outcome outcome =
        sys.sample_parametric(winner == 1 ? setting1 : setting2, stream);

    const double slack = std::min(delay1, delay2);
    const double trial_time = cfg.arrival_time + slack;
    const double slow_return = cfg.arrival_time + cfg.total_delay;
    // The winning side's return is trial_time + its own delay; the losing
    // side's is arrival + total_delay exactly (slack + max = total). Writing
    // it that way keeps the slow side bit-exact; the fast side is clamped
    // against the same bound to absorb the last-ulp rounding of the sum.
    const double fast_return = std::min(trial_time + slack, slow_return);
    const double return_time1 = winner == 1 ? fast_return : slow_return;
    const double return_time2 = winner == 2 ? fast_return : slow_return;

    const bool detected1 = cfg.open_time1 <= cfg.arrival_time && return_time1 <= cfg.shutter_time1;
    const bool detected2 = cfg.open_time2 <= cfg.arrival_time && return_time2 <= cfg.shutter_time2;

    return TrialTimeline{
        pair_index,
        setting1,
        setting2,
        delay1,
        delay2,
        winner,
        trial_time,
        outcome,
        return_time1,
        return_time2,
        detected1,
        detected2,
        sys.observe(setting1, outcome),
        sys.observe_station2(setting2, outcome),
    };
}

void accumulate(ChunkStats& stats, const SpacetimeConfig& cfg, const TrialTimeline& timeline,
                std::size_t index1, std::size_t index2, std::size_t arg_count) {
    const double completion1 = timeline.return_time1 - cfg.arrival_time;
    const double completion2 = timeline.return_time2 - cfg.arrival_time;

    stats.detected1 += timeline.detected1 ? 1 : 0;
    stats.detected2 += timeline.detected2 ? 1 : 0;
    stats.both += (timeline.detected1 && timeline.detected2) ? 1 : 0;
    stats.sum_completion1 += completion1;
    stats.sum_completion2 += completion2;
    stats.sum_min_side += std::min(completion1, completion2);
    stats.sum_max_side += std::max(completion1, completion2);
    stats.max_completion = std::max(stats.max_completion, std::max(completion1, completion2));

    // No event at the trial point before the first argument could arrive, no
    // observable before the outcome returned, nothing outside the risetime
    // window.
    const bool causal = timeline.trial_time >= cfg.arrival_time &&
                        timeline.return_time1 >= timeline.trial_time &&
                        timeline.return_time2 >= timeline.trial_time &&
                        std::max(timeline.return_time1, timeline.return_time2) ==
                            cfg.arrival_time + cfg.total_delay;
    stats.causality_ok = stats.causality_ok && causal;

    for (double completion : {completion1, completion2}) {
        auto bin = static_cast<std::size_t>(completion / cfg.total_delay *
                                            static_cast<double>(histogram_bins));
        stats.histogram[std::min(bin, histogram_bins - 1)] += 1;
    }

    const std::size_t bucket =
        std::min(index1, index2) * arg_count + std::max(index1, index2);
    const int product = timeline.observable1 * timeline.observable2;
    stats.full_counts[bucket] += 1;
    stats.full_sums[bucket] += product;
    if (timeline.detected1 && timeline.detected2) {
        stats.detected_counts[bucket] += 1;
        stats.detected_sums[bucket] += product;
    }
}

}  // namespace

ProtocolResult run_protocol(const SpacetimeConfig& config, bool keep_timelines) {
    config.validate();
    const std::size_t arg_count = config.arguments.arguments().size();
    const std::size_t buckets = arg_count * arg_count;

    std::vector<std::vector<TrialTimeline>> chunk_timelines;
    const std::uint64_t chunk_count =
        (config.pairs + default_chunk_size - 1) / default_chunk_size;
    if (keep_timelines) chunk_timelines.resize(static_cast<std::size_t>(chunk_count));

    const auto chunk_stats = run_chunked<ChunkStats>(
        config.pairs, config.threads,
        [&config, arg_count, buckets, keep_timelines,
         &chunk_timelines](std::uint64_t begin, std::uint64_t end) {
            ChunkStats stats;
            stats.full_counts.assign(buckets, 0);
            stats.full_sums.assign(buckets, 0);
            stats.detected_counts.assign(buckets, 0);
            stats.detected_sums.assign(buckets, 0);
            std::vector<TrialTimeline>* sink = nullptr;
            if (keep_timelines) {
                sink = &chunk_timelines[static_cast<std::size_t>(begin / default_chunk_size)];
                sink->reserve(static_cast<std::size_t>(end - begin));
            }
            for (std::uint64_t i = begin; i < end; ++i) {
                const TrialTimeline timeline = simulate_pair(config, i);
                // Re-derive the argument indices from the stored settings to
                // keep the accumulator independent of the draw internals.
                std::size_t index1 = 0, index2 = 0;
                const auto& arguments = config.arguments.arguments();
                for (std::size_t k = 0; k < arguments.size(); ++k) {
                    if (arguments[k] == timeline.setting1) index1 = k;
                    if (arguments[k] == timeline.setting2) index2 = k;
                }
                accumulate(stats, config, timeline, index1, index2, arg_count);
                if (sink) sink->push_back(timeline);
            }
            return stats;
        });

    ProtocolResult result;
    ProtocolSummary& summary = result.summary;
    summary.pairs = config.pairs;
    summary.risetime.total_delay = config.total_delay;
    summary.risetime.histogram.assign(histogram_bins, 0);

    std::vector<std::uint64_t> full_counts(buckets, 0);
    std::vector<std::int64_t> full_sums(buckets, 0);
    std::vector<std::uint64_t> detected_counts(buckets, 0);
    std::vector<std::int64_t> detected_sums(buckets, 0);

    double sum1 = 0.0, sum2 = 0.0, sum_min = 0.0, sum_max = 0.0;
    for (const ChunkStats& stats : chunk_stats) {
        summary.detected1 += stats.detected1;
        summary.detected2 += stats.detected2;
        summary.both_detected += stats.both;
        sum1 += stats.sum_completion1;
        sum2 += stats.sum_completion2;
        sum_min += stats.sum_min_side;
        sum_max += stats.sum_max_side;
        summary.risetime.max_completion =
            std::max(summary.risetime.max_completion, stats.max_completion);
        summary.causality_ok = summary.causality_ok && stats.causality_ok;
        for (std::size_t b = 0; b < histogram_bins; ++b)
            summary.risetime.histogram[b] += stats.histogram[b];
        for (std::size_t b = 0; b < buckets; ++b) {
            full_counts[b] += stats.full_counts[b];
            full_sums[b] += stats.full_sums[b];
            detected_counts[b] += stats.detected_counts[b];
            detected_sums[b] += stats.detected_sums[b];
        }
    }

    const auto pair_count = static_cast<double>(config.pairs);
    summary.yield = static_cast<double>(summary.both_detected) / pair_count;
    summary.risetime.mean_completion1 = sum1 / pair_count;
    summary.risetime.mean_completion2 = sum2 / pair_count;
    summary.risetime.mean_min_side = sum_min / pair_count;
    summary.risetime.mean_max_side = sum_max / pair_count;

    const auto& arguments = config.arguments.arguments();
    for (std::size_t i = 0; i < arg_count; ++i) {
        for (std::size_t j = i; j < arg_count; ++j) {
            const std::size_t bucket = i * arg_count + j;
            if (full_counts[bucket] == 0) continue;
            summary.full_correlations.push_back(
                {arguments[i], arguments[j], full_counts[bucket], full_sums[bucket]});
            summary.detected_correlations.push_back(
                {arguments[i], arguments[j], detected_counts[bucket], detected_sums[bucket]});
        }
    }

    if (keep_timelines) {
        result.timelines.reserve(static_cast<std::size_t>(config.pairs));
        for (auto& chunk : chunk_timelines)
            result.timelines.insert(result.timelines.end(), chunk.begin(), chunk.end());
    }
    return result;
}

RisetimeStats risetime_stats(std::span<const TrialTimeline> timelines, double total_delay,
                             std::size_t bins) {
    if (timelines.empty())
        throw std::invalid_argument("risetime_stats: need at least one timeline");
    RisetimeStats stats;
    stats.total_delay = total_delay;
    stats.histogram.assign(bins, 0);

    double sum1 = 0.0, sum2 = 0.0, sum_min = 0.0, sum_max = 0.0;
    double arrival = timelines.front().trial_time - std::min(timelines.front().delay1,
                                                             timelines.front().delay2);
    for (const TrialTimeline& timeline : timelines) {
        arrival = timeline.trial_time - std::min(timeline.delay1, timeline.delay2);
        const double completion1 = timeline.return_time1 - arrival;
        const double completion2 = timeline.return_time2 - arrival;
        sum1 += completion1;
        sum2 += completion2;
        sum_min += std::min(completion1, completion2);
        sum_max += std::max(completion1, completion2);
        stats.max_completion = std::max(stats.max_completion, std::max(completion1, completion2));
        for (double completion : {completion1, completion2}) {
            auto bin = static_cast<std::size_t>(completion / total_delay *
                                                static_cast<double>(bins));
            stats.histogram[std::min(bin, bins - 1)] += 1;
        }
    }
    const auto count = static_cast<double>(timelines.size());
    stats.mean_completion1 = sum1 / count;
    stats.mean_completion2 = sum2 / count;
    stats.mean_min_side = sum_min / count;
    stats.mean_max_side = sum_max / count;
    return stats;
}

std::vector<YieldPoint> yield_curve(const SpacetimeConfig& base,
                                    std::span<const double> margins, bool one_sided) {
    std::vector<YieldPoint> curve;
    curve.reserve(margins.size());
    for (double margin : margins) {
        if (margin < 0.0)
            throw std::invalid_argument("yield_curve: margins must be nonnegative");
        SpacetimeConfig config = base;
        config.shutter_time1 = base.arrival_time + margin;
        config.shutter_time2 = one_sided ? never : base.arrival_time + margin;
        const ProtocolResult result = run_protocol(config);
        curve.push_back({margin, result.summary.yield});
    }
    return curve;
}

}  // namespace gaugesim::spacetime
