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

#include "gaugesim/gauge_system.hpp"

#include <cmath>
#include <stdexcept>

#include "gaugesim/quadrature.hpp"
#include "gaugesim/sampler.hpp"

namespace gaugesim {

namespace {

void validate_events(const GaugeSystem& sys, std::span<const SignEvent> events) {
    if (events.empty() || events.size() > 2)
        throw std::invalid_argument("event_probability: expected one or two sign events");
    for (const SignEvent& event : events) {
        if (event.sign != 1 && event.sign != -1)
            throw std::invalid_argument("event_probability: sign must be +1 or -1");
        sys.validate_argument(event.argument);
    }
}

}  // namespace

GaugeSystem::GaugeSystem(std::string name, Rational mixing, bool anticorrelated)
    : name_(std::move(name)), mixing_(mixing), anticorrelated_(anticorrelated) {
    if (mixing_ < Rational(0) || mixing_ > Rational(1))
        throw std::invalid_argument("GaugeSystem: mixing coefficient outside [0, 1]");
}

ParametricDistribution GaugeSystem::effective_distribution(const Argument& u1,
                                                           const Argument& u2) const {
    return mix(parametric_distribution(u1), parametric_distribution(u2), mixing_);
}

Outcome GaugeSystem::sample_effective(const Argument& u1, const Argument& u2,
                                      RandomStream& stream) const {
    if (mixing_ == Rational(1)) return sample_parametric(u1, stream);
    if (mixing_ == Rational(0)) return sample_parametric(u2, stream);
    // Fractional mixture: pick the component, then sample it.
    const bool first = stream.next_uniform() < mixing_.to_double();
    return sample_parametric(first ? u1 : u2, stream);
}

// ---------------------------------------------------------------------------
// DiscreteSystem

DiscreteSystem::DiscreteSystem(std::string name, std::vector<std::string> outcome_labels,
                               std::vector<Column> columns, Rational mixing,
                               bool anticorrelated)
    : GaugeSystem(std::move(name), mixing, anticorrelated),
      outcome_labels_(std::move(outcome_labels)),
      columns_(std::move(columns)) {
    const std::size_t size = outcome_labels_.size();
    if (size == 0)
        throw std::invalid_argument("DiscreteSystem: empty outcome set");
    if (columns_.empty())
        throw std::invalid_argument("DiscreteSystem: no argument columns");

    for (const Column& column : columns_) {
        if (column.signs.size() != size || column.masses.size() != size)
            throw std::invalid_argument("DiscreteSystem: column '" + column.name +
                                        "' does not match the outcome set size");
        for (int s : column.signs)
            if (s != 1 && s != -1)
                throw std::invalid_argument("DiscreteSystem: observable sign must be +1 or -1");
        // Validates nonnegativity and the exact sum-to-1 invariant.
        ParametricDistribution::discrete(column.masses);
        for (const Column& other : columns_)
            if (&other != &column && other.name == column.name)
                throw std::invalid_argument("DiscreteSystem: duplicate argument '" +
                                            column.name + "'");
    }

    argument_independent_ = true;
    for (const Column& column : columns_)
        if (column.masses != columns_.front().masses) argument_independent_ = false;

    cumulative_.reserve(columns_.size());
    for (const Column& column : columns_)
        cumulative_.push_back(cumulative_thresholds(column.masses));

    pair_cumulative_.resize(columns_.size() * columns_.size());
    const Rational complement = Rational(1) - mixing_;
    for (std::size_t i = 0; i < columns_.size(); ++i) {
        for (std::size_t j = 0; j < columns_.size(); ++j) {
            std::vector<Rational> mixed(size);
            for (std::size_t k = 0; k < size; ++k)
                mixed[k] = mixing_ * columns_[i].masses[k] + complement * columns_[j].masses[k];
            pair_cumulative_[i * columns_.size() + j] = cumulative_thresholds(mixed);
        }
    }
}

std::size_t DiscreteSystem::argument_index(const Argument& u) const {
    if (!u.is_label())
        throw std::invalid_argument("DiscreteSystem: argument must be a label, got angle " +
                                    u.display());
    for (std::size_t i = 0; i < columns_.size(); ++i)
        if (columns_[i].name == u.label_name()) return i;
    throw std::invalid_argument("DiscreteSystem: unknown argument '" + u.label_name() + "'");
}

std::vector<Argument> DiscreteSystem::built_in_arguments() const {
    std::vector<Argument> arguments;
    arguments.reserve(columns_.size());
    for (const Column& column : columns_) arguments.push_back(Argument::label(column.name));
    return arguments;
}

void DiscreteSystem::validate_argument(const Argument& u) const { argument_index(u); }

int DiscreteSystem::observe(const Argument& u, const Outcome& outcome) const {
    const std::size_t arg = argument_index(u);
    const std::size_t index = outcome.as_index();
    if (index >= outcome_count())
        throw std::domain_error("DiscreteSystem: outcome index " + std::to_string(index) +
                                " outside the outcome set");
    return columns_[arg].signs[index];
}

ParametricDistribution DiscreteSystem::parametric_distribution(const Argument& u) const {
    return ParametricDistribution::discrete(columns_[argument_index(u)].masses);
}

Outcome DiscreteSystem::sample_parametric(const Argument& u, RandomStream& stream) const {
    return Outcome::index(sample_index(cumulative_[argument_index(u)], stream));
}

Outcome DiscreteSystem::sample_effective(const Argument& u1, const Argument& u2,
                                         RandomStream& stream) const {
    const std::size_t i = argument_index(u1);
    const std::size_t j = argument_index(u2);
    return Outcome::index(sample_index(pair_cumulative_[i * columns_.size() + j], stream));
}

Rational DiscreteSystem::event_probability_exact_mix(const Argument& u1, const Argument& u2,
                                                     std::span<const SignEvent> events,
                                                     const Rational& m) const {
    validate_events(*this, events);
    if (m < Rational(0) || m > Rational(1))
        throw std::invalid_argument("event_probability: mixing coefficient outside [0, 1]");
    const std::size_t i = argument_index(u1);
    const std::size_t j = argument_index(u2);

    Rational p1(0), p2(0);
    for (std::size_t k = 0; k < outcome_count(); ++k) {
        bool matches = true;
        for (const SignEvent& event : events)
            if (columns_[argument_index(event.argument)].signs[k] != event.sign) matches = false;
        if (!matches) continue;
        p1 += columns_[i].masses[k];
        p2 += columns_[j].masses[k];
    }
    return m * p1 + (Rational(1) - m) * p2;
}

double DiscreteSystem::event_probability_mix(const Argument& u1, const Argument& u2,
                                             std::span<const SignEvent> events,
                                             const Rational& m) const {
    return event_probability_exact_mix(u1, u2, events, m).to_double();
}

Rational DiscreteSystem::expectation_exact(const Argument& dist_arg,
                                           std::span<const Argument> observed) const {
    const std::size_t dist = argument_index(dist_arg);
    std::vector<std::size_t> observed_indices;
    observed_indices.reserve(observed.size());
    for (const Argument& u : observed) observed_indices.push_back(argument_index(u));

    Rational total(0);
    for (std::size_t k = 0; k < outcome_count(); ++k) {
        int product = 1;
        for (std::size_t arg : observed_indices) product *= columns_[arg].signs[k];
        total += Rational(product) * columns_[dist].masses[k];
    }
    return total;
}

// ---------------------------------------------------------------------------
// ContinuousSystem

void ContinuousSystem::validate_argument(const Argument& u) const {
    if (!u.is_angle())
        throw std::invalid_argument("ContinuousSystem: argument must be an angle, got label '" +
                                    u.display() + "'");
}

int ContinuousSystem::observe(const Argument& u, const Outcome& outcome) const {
    validate_argument(u);
    return sign_plus(std::cos(outcome.as_point() - u.radians()));
}

std::vector<double> ContinuousSystem::observable_breakpoints(double setting) const {
    return {wrap_angle(setting + std::numbers::pi / 2.0),
            wrap_angle(setting - std::numbers::pi / 2.0)};
}

ParametricDistribution ContinuousSystem::parametric_distribution(const Argument& u) const {
    validate_argument(u);
    const double setting = u.radians();
    CircleDensity density_fn;
    density_fn.pdf = [this, setting](double point) { return density(setting, point); };
    density_fn.breakpoints = density_breakpoints(setting);
    return ParametricDistribution::circle(std::move(density_fn));
}

Outcome ContinuousSystem::sample_parametric(const Argument& u, RandomStream& stream) const {
    validate_argument(u);
    return Outcome::point(sample_point(u.radians(), stream));
}

double ContinuousSystem::event_probability_mix(const Argument& u1, const Argument& u2,
                                               std::span<const SignEvent> events,
                                               const Rational& m) const {
    validate_events(*this, events);
    validate_argument(u1);
    validate_argument(u2);
    if (m < Rational(0) || m > Rational(1))
        throw std::invalid_argument("event_probability: mixing coefficient outside [0, 1]");

    const double w = m.to_double();
    const double a1 = u1.radians();
    const double a2 = u2.radians();

    std::vector<double> breakpoints = density_breakpoints(a1);
    for (double b : density_breakpoints(a2)) breakpoints.push_back(b);
    std::vector<SignEvent> event_list(events.begin(), events.end());
    for (const SignEvent& event : event_list)
        for (double b : observable_breakpoints(event.argument.radians()))
            breakpoints.push_back(b);

    const auto integrand = [this, w, a1, a2, &event_list](double point) {
        for (const SignEvent& event : event_list)
            if (sign_plus(std::cos(point - event.argument.radians())) != event.sign) return 0.0;
        return w * density(a1, point) + (1.0 - w) * density(a2, point);
    };
    return integrate_circle(integrand, breakpoints);
}

// ---------------------------------------------------------------------------
// CircleSystem

CircleSystem::CircleSystem(Rational mixing, bool anticorrelated)
    : ContinuousSystem("circle", mixing, anticorrelated) {}

double CircleSystem::density(double setting, double point) const {
    return 0.25 * std::abs(std::cos(point - setting));
}

std::vector<double> CircleSystem::density_breakpoints(double setting) const {
    return observable_breakpoints(setting);
}

double CircleSystem::sample_point(double setting, RandomStream& stream) const {
    return sample_circle_angle(setting, stream);
}

// ---------------------------------------------------------------------------
// UniformCircleSystem

UniformCircleSystem::UniformCircleSystem(bool anticorrelated)
    : ContinuousSystem("kolmogorov-uniform", Rational(1), anticorrelated) {}

double UniformCircleSystem::density(double, double) const { return 1.0 / two_pi; }

std::vector<double> UniformCircleSystem::density_breakpoints(double) const { return {}; }

double UniformCircleSystem::sample_point(double, RandomStream& stream) const {
    return wrap_angle(two_pi * stream.next_uniform());
}

}  // namespace gaugesim
