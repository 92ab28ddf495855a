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

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gaugesim/argument.hpp"
#include "gaugesim/distribution.hpp"
#include "gaugesim/random.hpp"

namespace gaugesim {

/// A single-observable sign event: the set of outcomes where the observable
/// for `argument` takes the given sign. Conjunctions of one or two of these
/// form the testable events of a pair experiment.
struct SignEvent {
    Argument argument;
    int sign;  // +1 or -1
};

/// A contextual probability system: a fixed outcome set, one parametric
/// distribution per measurement argument, a deterministic +-1 observable,
/// and the mixing coefficient that blends the two selected arguments'
/// distributions into the per-trial one.
///
/// Instances are immutable after construction and safe to share across
/// threads.
class GaugeSystem {
public:
    virtual ~GaugeSystem() = default;

    const std::string& name() const { return name_; }

    /// Mixing coefficient m in [0, 1]: the per-trial distribution for the
    /// argument pair (u1, u2) is m*p_u1 + (1-m)*p_u2. Kept as an exact
    /// rational so discrete mixtures stay exact.
    const Rational& mixing() const { return mixing_; }

    /// When set, station 2 reports the negated observable, recovering the
    /// opposite-sign correlation convention of real spin pairs.
    bool anticorrelated() const { return anticorrelated_; }

    virtual bool discrete() const = 0;

    /// True when every argument shares one distribution (the classical
    /// control case).
    virtual bool argument_independent() const { return false; }

    /// Arguments the system ships with (labels for discrete systems); angle
    /// systems return an empty list since any direction is valid.
    virtual std::vector<Argument> built_in_arguments() const { return {}; }

    /// Throws std::invalid_argument if `u` cannot be used with this system.
    virtual void validate_argument(const Argument& u) const = 0;

    /// The deterministic observable F(u, outcome) in {-1, +1}.
    /// Throws std::domain_error if the outcome is not in the outcome set.
    virtual int observe(const Argument& u, const Outcome& outcome) const = 0;

    /// What station 2 reports for its argument: F, or -F when the system is
    /// anticorrelated.
    int observe_station2(const Argument& u, const Outcome& outcome) const {
        const int s = observe(u, outcome);
        return anticorrelated_ ? -s : s;
    }

    virtual ParametricDistribution parametric_distribution(const Argument& u) const = 0;

    /// The per-trial distribution for a selected argument pair:
    /// m*p_u1 + (1-m)*p_u2.
    ParametricDistribution effective_distribution(const Argument& u1,
                                                  const Argument& u2) const;

    /// One outcome from the parametric distribution of `u`.
    virtual Outcome sample_parametric(const Argument& u, RandomStream& stream) const = 0;

    /// One outcome from the effective distribution of the pair. For m = 0 or
    /// 1 this consumes exactly the draws of one parametric sample.
    virtual Outcome sample_effective(const Argument& u1, const Argument& u2,
                                     RandomStream& stream) const;

    /// Probability of a conjunction of one or two sign events under the
    /// effective distribution of (u1, u2).
    double event_probability(const Argument& u1, const Argument& u2,
                             std::span<const SignEvent> events) const {
        return event_probability_mix(u1, u2, events, mixing_);
    }

    /// Same, with an explicit mixing coefficient (the statistics of a
    /// consistent system do not depend on it).
    virtual double event_probability_mix(const Argument& u1, const Argument& u2,
                                         std::span<const SignEvent> events,
                                         const Rational& m) const = 0;

protected:
    GaugeSystem(std::string name, Rational mixing, bool anticorrelated);

    std::string name_;
    Rational mixing_;
    bool anticorrelated_;
};

/// Finite outcome set with per-argument sign and mass columns. All
/// probabilities and expectations are exact rationals.
class DiscreteSystem final : public GaugeSystem {
public:
    struct Column {
        std::string name;
        std::vector<int> signs;        // +-1 per outcome
        std::vector<Rational> masses;  // sums to 1
    };

    DiscreteSystem(std::string name, std::vector<std::string> outcome_labels,
                   std::vector<Column> columns, Rational mixing = Rational(1),
                   bool anticorrelated = false);

    std::size_t outcome_count() const { return outcome_labels_.size(); }
    const std::vector<std::string>& outcome_labels() const { return outcome_labels_; }
    const std::vector<Column>& columns() const { return columns_; }
    std::size_t argument_index(const Argument& u) const;

    bool discrete() const override { return true; }
    bool argument_independent() const override { return argument_independent_; }
    std::vector<Argument> built_in_arguments() const override;
    void validate_argument(const Argument& u) const override;
    int observe(const Argument& u, const Outcome& outcome) const override;
    ParametricDistribution parametric_distribution(const Argument& u) const override;
    Outcome sample_parametric(const Argument& u, RandomStream& stream) const override;
    Outcome sample_effective(const Argument& u1, const Argument& u2,
                             RandomStream& stream) const override;
    double event_probability_mix(const Argument& u1, const Argument& u2,
                                 std::span<const SignEvent> events,
                                 const Rational& m) const override;

    /// Exact effective-distribution event probability.
    Rational event_probability_exact(const Argument& u1, const Argument& u2,
                                     std::span<const SignEvent> events) const {
        return event_probability_exact_mix(u1, u2, events, mixing_);
    }
    Rational event_probability_exact_mix(const Argument& u1, const Argument& u2,
                                         std::span<const SignEvent> events,
                                         const Rational& m) const;

    /// Exact parametric expectation of a product of observables:
    /// E_dist[ prod_i s_observed[i] ].
    Rational expectation_exact(const Argument& dist_arg,
                               std::span<const Argument> observed) const;

private:
    std::vector<std::string> outcome_labels_;
    std::vector<Column> columns_;
    bool argument_independent_ = false;
    // Cumulative mass thresholds per argument, and per ordered argument pair
    // under the stored mixing coefficient; one uniform draw against these
    // selects an outcome.
    std::vector<std::vector<double>> cumulative_;
    std::vector<std::vector<double>> pair_cumulative_;
};

/// Systems over the unit circle. Concrete models supply the density family
/// and sampler; the observable sign(cos(point - setting)) is shared.
class ContinuousSystem : public GaugeSystem {
public:
    bool discrete() const override { return false; }
    void validate_argument(const Argument& u) const override;
    int observe(const Argument& u, const Outcome& outcome) const override;
    ParametricDistribution parametric_distribution(const Argument& u) const override;
    Outcome sample_parametric(const Argument& u, RandomStream& stream) const override;
    double event_probability_mix(const Argument& u1, const Argument& u2,
                                 std::span<const SignEvent> events,
                                 const Rational& m) const override;

    /// Density p_u evaluated at a circle point.
    virtual double density(double setting, double point) const = 0;
    /// Angles where p_u's smooth pieces meet.
    virtual std::vector<double> density_breakpoints(double setting) const = 0;
    /// Angles where the observable for `setting` changes sign.
    std::vector<double> observable_breakpoints(double setting) const;
    /// One point drawn from p_u.
    virtual double sample_point(double setting, RandomStream& stream) const = 0;

protected:
    using GaugeSystem::GaugeSystem;
};

/// Circle model: density |cos(point - setting)|/4, observable
/// sign(cos(point - setting)).
class CircleSystem final : public ContinuousSystem {
public:
    explicit CircleSystem(Rational mixing = Rational(1), bool anticorrelated = false);

    double density(double setting, double point) const override;
    std::vector<double> density_breakpoints(double setting) const override;
    double sample_point(double setting, RandomStream& stream) const override;
};

/// Control model: one uniform distribution for every argument, same
/// observable as CircleSystem. Satisfies the classical decoupling
/// hypothesis by construction.
class UniformCircleSystem final : public ContinuousSystem {
public:
    explicit UniformCircleSystem(bool anticorrelated = false);

    bool argument_independent() const override { return true; }
    double density(double setting, double point) const override;
    std::vector<double> density_breakpoints(double setting) const override;
    double sample_point(double setting, RandomStream& stream) const override;
};

}  // namespace gaugesim
