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

#include "gaugesim/signaling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gaugesim/consistency.hpp"
#include "gaugesim/parallel.hpp"

namespace gaugesim::signaling {

namespace {

struct Counts {
    std::uint64_t n[2][2] = {{0, 0}, {0, 0}};
};

}  // namespace

ChannelReport run_channel(const GaugeSystem& sys, const ChannelExperiment& experiment) {
    if (experiment.prior_first < 0.0 || experiment.prior_first > 1.0)
        throw std::invalid_argument("run_channel: prior outside [0, 1]");
    if (experiment.trials == 0)
        throw std::invalid_argument("run_channel: need at least one trial");
    sys.validate_argument(experiment.first_argument);
    sys.validate_argument(experiment.second_argument);
    sys.validate_argument(experiment.receiver_argument);

    ChannelReport report;
    report.experiment = experiment;

    {
        // The no-signaling verdict is only meaningful for a consistent
        // system, so the report carries that context.
        std::vector<Argument> involved;
        for (const Argument& u : {experiment.first_argument, experiment.second_argument,
                                  experiment.receiver_argument})
            if (std::find(involved.begin(), involved.end(), u) == involved.end())
                involved.push_back(u);
        if (involved.size() >= 2)
            report.consistent = consistency::verify(sys, involved).pass;
        else
            report.consistent = true;
    }

    const double prior = experiment.prior_first;
    const auto chunk_counts = run_chunked<Counts>(
        experiment.trials, experiment.threads,
        [&sys, &experiment, prior](std::uint64_t begin, std::uint64_t end) {
            Counts counts;
            for (std::uint64_t i = begin; i < end; ++i) {
                RandomStream stream(experiment.seed, substream(0, i));
                const bool first = stream.next_uniform() < prior;
                const Argument& sender =
                    first ? experiment.first_argument : experiment.second_argument;
                // Station 1's argument arrives first at the trial point, so
                // its parametric distribution governs the draw.
                const Outcome outcome = sys.sample_parametric(sender, stream);
                const int s2 = sys.observe_station2(experiment.receiver_argument, outcome);
                counts.n[first ? 0 : 1][s2 == +1 ? 0 : 1] += 1;
            }
            return counts;
        });

    for (const Counts& counts : chunk_counts)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) report.counts[i][j] += counts.n[i][j];

    const auto posterior = [&report](int column) -> std::optional<double> {
        const std::uint64_t conditioned = report.counts[0][column] + report.counts[1][column];
        if (conditioned == 0) return std::nullopt;
        return static_cast<double>(report.counts[0][column]) /
               static_cast<double>(conditioned);
    };
    const auto bound = [&report, prior](int column) -> std::optional<double> {
        const std::uint64_t conditioned = report.counts[0][column] + report.counts[1][column];
        if (conditioned == 0) return std::nullopt;
        return 4.0 * std::sqrt(prior * (1.0 - prior) / static_cast<double>(conditioned));
    };

    report.posterior_given_plus = posterior(0);
    report.posterior_given_minus = posterior(1);
    report.bound_plus = bound(0);
    report.bound_minus = bound(1);

    report.no_signaling = true;
    if (report.posterior_given_plus &&
        std::abs(*report.posterior_given_plus - prior) > *report.bound_plus)
        report.no_signaling = false;
    if (report.posterior_given_minus &&
        std::abs(*report.posterior_given_minus - prior) > *report.bound_minus)
        report.no_signaling = false;
    return report;
}

}  // namespace gaugesim::signaling
