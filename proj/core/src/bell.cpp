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

#include "gaugesim/bell.hpp"

#include <cmath>
#include <stdexcept>

namespace gaugesim::bell {

ObservableArray ObservableArray::of(Argument argument, std::vector<std::int8_t> values) {
    if (values.empty())
        throw std::invalid_argument("ObservableArray: empty array");
    for (std::int8_t v : values)
        if (v != 1 && v != -1)
            throw std::invalid_argument("ObservableArray: values must be +1 or -1");
    return ObservableArray{std::move(argument), std::move(values)};
}

std::size_t hamming_distance(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y) {
    if (x.size() != y.size())
        throw std::invalid_argument("hamming_distance: length mismatch");
    std::size_t count = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        count += (x[i] != y[i]) ? 1 : 0;
    return count;
}

std::vector<std::uint8_t> to_bits(const ObservableArray& s) {
    std::vector<std::uint8_t> bits(s.values.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        bits[i] = static_cast<std::uint8_t>((1 + s.values[i]) / 2);
    return bits;
}

Rational normalized_distance(const ObservableArray& s1, const ObservableArray& s2) {
    if (s1.size() != s2.size())
        throw std::invalid_argument("normalized_distance: length mismatch");
    const std::size_t differing = hamming_distance(to_bits(s1), to_bits(s2));
    return Rational(static_cast<std::int64_t>(differing), static_cast<std::int64_t>(s1.size()));
}

Rational empirical_correlation(const ObservableArray& s1, const ObservableArray& s2) {
    if (s1.size() != s2.size())
        throw std::invalid_argument("empirical_correlation: length mismatch");
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < s1.size(); ++i)
        sum += static_cast<std::int64_t>(s1.values[i]) * s2.values[i];
    return Rational(sum, static_cast<std::int64_t>(s1.size()));
}

namespace {

void check_correlation_range(double m, const char* which) {
    if (!(m >= -1.0 && m <= 1.0))
        throw std::invalid_argument(std::string("bell_check: ") + which +
                                    " outside [-1, 1]");
}

}  // namespace

BellEvaluation bell_check(double m_ab, double m_ac, double m_bc) {
    check_correlation_range(m_ab, "M(a,b)");
    check_correlation_range(m_ac, "M(a,c)");
    check_correlation_range(m_bc, "M(b,c)");
    BellEvaluation eval;
    eval.lhs = std::abs(m_ab - m_ac);
    eval.rhs = 1.0 - m_bc;
    eval.violated = eval.lhs > eval.rhs;
    eval.source = "empirical";
    return eval;
}

BellEvaluation bell_check(const Rational& m_ab, const Rational& m_ac, const Rational& m_bc) {
    for (const Rational* m : {&m_ab, &m_ac, &m_bc})
        if (*m < Rational(-1) || *m > Rational(1))
            throw std::invalid_argument("bell_check: correlation outside [-1, 1]");
    const Rational lhs = (m_ab - m_ac).abs();
    const Rational rhs = Rational(1) - m_bc;
    BellEvaluation eval;
    eval.lhs = lhs.to_double();
    eval.rhs = rhs.to_double();
    eval.violated = lhs > rhs;  // exact comparison, no tolerance
    eval.source = "exact";
    return eval;
}

SharedOutcomeTriple shared_outcome_triple(const GaugeSystem& sys,
                                          const std::array<Argument, 3>& arguments,
                                          std::size_t n, std::uint64_t seed) {
    if (!sys.argument_independent())
        throw std::invalid_argument(
            "shared_outcome_triple: system '" + sys.name() +
            "' has argument-dependent distributions; a single outcome array is only valid "
            "for an argument-independent system");
    if (n == 0)
        throw std::invalid_argument("shared_outcome_triple: need at least one trial");
    for (const Argument& u : arguments) sys.validate_argument(u);

    SharedOutcomeTriple triple{
        {},
        {ObservableArray{arguments[0], {}}, ObservableArray{arguments[1], {}},
         ObservableArray{arguments[2], {}}}};
    triple.outcomes.reserve(n);
    for (auto& array : triple.arrays) array.values.reserve(n);

    for (std::size_t i = 0; i < n; ++i) {
        RandomStream stream(seed, substream(0, i));
        // Argument-independent: any argument addresses the same distribution.
        const Outcome outcome = sys.sample_parametric(arguments[0], stream);
        triple.outcomes.push_back(outcome);
        for (std::size_t k = 0; k < 3; ++k)
            triple.arrays[k].values.push_back(
                static_cast<std::int8_t>(sys.observe(arguments[k], outcome)));
    }
    return triple;
}

std::pair<ObservableArray, ObservableArray> sample_pair_arrays(const GaugeSystem& sys,
                                                               const Argument& u1,
                                                               const Argument& u2,
                                                               std::size_t n,
                                                               std::uint64_t seed,
                                                               std::uint64_t experiment) {
    if (n == 0)
        throw std::invalid_argument("sample_pair_arrays: need at least one trial");
    sys.validate_argument(u1);
    sys.validate_argument(u2);

    ObservableArray s1{u1, {}};
    ObservableArray s2{u2, {}};
    s1.values.reserve(n);
    s2.values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        RandomStream stream(seed, substream(experiment, i));
        const Outcome outcome = sys.sample_effective(u1, u2, stream);
        s1.values.push_back(static_cast<std::int8_t>(sys.observe(u1, outcome)));
        s2.values.push_back(static_cast<std::int8_t>(sys.observe_station2(u2, outcome)));
    }
    return {std::move(s1), std::move(s2)};
}

}  // namespace gaugesim::bell
