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

#include <iosfwd>
#include <span>
#include <string>

#include "gaugesim/bell.hpp"
#include "gaugesim/spacetime.hpp"

namespace gaugesim {

// All CSV uses '.' decimals, '\n' line endings and always carries a header
// row, so fixtures can be compared byte for byte.

/// Shortest round-trip decimal form, locale-independent.
std::string format_double(double value);

/// One +-1 column per argument; the header carries the argument names.
void write_arrays_csv(std::ostream& out, std::span<const bell::ObservableArray> arrays);
std::vector<bell::ObservableArray> read_arrays_csv(std::istream& in);

/// One row per pair. Outcomes print as their label (discrete) or angle.
void write_timelines_csv(std::ostream& out, std::span<const spacetime::TrialTimeline> timelines,
                         const GaugeSystem& sys);

void write_yield_csv(std::ostream& out, std::span<const spacetime::YieldPoint> curve);

}  // namespace gaugesim
