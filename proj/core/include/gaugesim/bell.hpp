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

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gaugesim/gauge_system.hpp"

namespace gaugesim::bell {

/// The +-1 measurement results of one argument over N trials.
struct ObservableArray {
    Argument argument;
    std::vector<std::int8_t> values;  // each +1 or -1

    static ObservableArray of(Argument argument, std::vector<std::int8_t> values);
    std::size_t size() const { return values.size(); }
};

/// Number of differing positions between two equal-length binary words.
/// Throws std::invalid_argument on a length mismatch.
std::size_t hamming_distance(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y);

/// Observables mapped to bits by (1 + s)/2.
std::vector<std::uint8_t> to_bits(const ObservableArray& s);

/// Hamming distance per position between two observable arrays; exactly
/// (1 - correlation)/2.
Rational normalized_distance(const ObservableArray& s1, const ObservableArray& s2);

/// Arithmetic mean of the elementwise products, accumulated in integers and
/// divided once, so it is an exact rational of the data.
Rational empirical_correlation(const ObservableArray& s1, const ObservableArray& s2);

/// Outcome of testing |M(a,b) - M(a,c)| <= 1 - M(b,c).
struct BellEvaluation {
    double lhs = 0.0;
    double rhs = 0.0;
    bool violated = false;
    std::string source;  // "exact" | "empirical"

    double margin() const { return lhs - rhs; }
};

/// Checks the three-correlation inequality on floating-point correlations.
/// Throws std::invalid_argument if any input leaves [-1, 1].
BellEvaluation bell_check(double m_ab, double m_ac, double m_bc);

/// Exact-rational variant: the violation verdict is decided in integer
/// arithmetic, with no tolerance.
BellEvaluation bell_check(const Rational& m_ab, const Rational& m_ac, const Rational& m_bc);

/// One outcome array of length N drawn from the (argument-independent)
/// distribution of `sys`, mapped through the observable under each of the
/// three arguments. The three arrays share outcomes index by index, which
/// forces the empirical inequality to hold exactly at any N.
struct SharedOutcomeTriple {
    std::vector<Outcome> outcomes;
    std::array<ObservableArray, 3> arrays;
};

SharedOutcomeTriple shared_outcome_triple(const GaugeSystem& sys,
                                          const std::array<Argument, 3>& arguments,
                                          std::size_t n, std::uint64_t seed);

/// N trials of the two-station pair experiment at fixed arguments: one
/// outcome per trial from the effective distribution, observed by both
/// stations (station 2 honoring the anticorrelated convention). Trial i
/// uses stream id substream(experiment, i).
std::pair<ObservableArray, ObservableArray> sample_pair_arrays(const GaugeSystem& sys,
                                                               const Argument& u1,
                                                               const Argument& u2,
                                                               std::size_t n,
                                                               std::uint64_t seed,
                                                               std::uint64_t experiment = 0);

}  // namespace gaugesim::bell
