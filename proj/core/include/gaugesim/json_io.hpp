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

#include <nlohmann/json.hpp>

#include "gaugesim/bell.hpp"
#include "gaugesim/consistency.hpp"
#include "gaugesim/signaling.hpp"
#include "gaugesim/spacetime.hpp"

namespace gaugesim {

// Reports serialize to ordered JSON so repeated runs emit byte-identical
// documents.
using Json = nlohmann::ordered_json;

Json to_json(const Argument& argument);
Json to_json(const bell::BellEvaluation& evaluation);
Json to_json(const consistency::ConsistencyReport& report);
Json to_json(const signaling::ChannelReport& report);
Json to_json(const spacetime::RisetimeStats& stats);
Json to_json(const spacetime::ProtocolSummary& summary);
Json to_json(std::span<const spacetime::YieldPoint> curve);

bell::BellEvaluation bell_evaluation_from_json(const nlohmann::json& j);

/// Builds a gauge system from a JSON document.
///
/// Discrete systems list their outcome labels, per-argument observable signs
/// and rational mass columns:
///   {"type": "discrete", "name": "...", "m": "1/2",
///    "outcomes": ["l1", ...],
///    "arguments": [{"name": "a", "signs": [1, -1, ...],
///                   "masses": ["3/12", ...]}, ...]}
///
/// Continuous systems name a built-in family plus parameters:
///   {"type": "circle", "m": "1"}
///   {"type": "kolmogorov-uniform"}
///
/// "m" (optional, default 1) is a rational string, integer, or decimal;
/// "anticorrelated" (optional, default false) flips station 2's sign.
std::shared_ptr<const GaugeSystem> system_from_json(const nlohmann::json& j);

}  // namespace gaugesim
