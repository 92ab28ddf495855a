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

#include "gaugesim/csv_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gaugesim {

std::string format_double(double value) {
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, result.ptr);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream stream(line);
    while (std::getline(stream, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

Argument argument_from_header(const std::string& cell) {
    try {
        return Argument::angle(parse_angle(cell));
    } catch (const std::invalid_argument&) {
        return Argument::label(cell);
    }
}

}  // namespace

void write_arrays_csv(std::ostream& out, std::span<const bell::ObservableArray> arrays) {
    if (arrays.empty())
        throw std::invalid_argument("write_arrays_csv: no arrays");
    const std::size_t n = arrays.front().size();
    for (const bell::ObservableArray& array : arrays)
        if (array.size() != n)
            throw std::invalid_argument("write_arrays_csv: arrays differ in length");

    for (std::size_t k = 0; k < arrays.size(); ++k)
        out << (k ? "," : "") << arrays[k].argument.display();
    out << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < arrays.size(); ++k)
            out << (k ? "," : "") << static_cast<int>(arrays[k].values[i]);
        out << '\n';
    }
}

std::vector<bell::ObservableArray> read_arrays_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("read_arrays_csv: missing header row");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::vector<bell::ObservableArray> arrays;
    for (const std::string& cell : split_csv_line(line))
        arrays.push_back(bell::ObservableArray{argument_from_header(cell), {}});
    if (arrays.empty())
        throw std::invalid_argument("read_arrays_csv: empty header row");

    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != arrays.size())
            throw std::invalid_argument("read_arrays_csv: row " + std::to_string(row) +
                                        " has " + std::to_string(cells.size()) + " cells, expected " +
                                        std::to_string(arrays.size()));
        for (std::size_t k = 0; k < cells.size(); ++k) {
            const std::string& cell = cells[k];
            if (cell == "1" || cell == "+1")
                arrays[k].values.push_back(+1);
            else if (cell == "-1")
                arrays[k].values.push_back(-1);
            else
                throw std::invalid_argument("read_arrays_csv: row " + std::to_string(row) +
                                            ": expected +-1, got '" + cell + "'");
        }
    }
    for (const bell::ObservableArray& array : arrays)
        if (array.values.empty())
            throw std::invalid_argument("read_arrays_csv: no data rows");
    return arrays;
}

void write_timelines_csv(std::ostream& out, std::span<const spacetime::TrialTimeline> timelines,
                         const GaugeSystem& sys) {
    out << "pair,setting1,setting2,delay1,delay2,winner,trial_time,outcome,"
           "return_time1,return_time2,detected1,detected2,s1,s2\n";
    const auto* discrete = dynamic_cast<const DiscreteSystem*>(&sys);
    for (const spacetime::TrialTimeline& t : timelines) {
        out << t.pair_index << ',' << t.setting1.display() << ',' << t.setting2.display() << ','
            << format_double(t.delay1) << ',' << format_double(t.delay2) << ',' << t.winner
            << ',' << format_double(t.trial_time) << ',';
        if (t.outcome.is_index() && discrete)
            out << discrete->outcome_labels()[t.outcome.as_index()];
        else if (t.outcome.is_index())
            out << t.outcome.as_index();
        else
            out << format_double(t.outcome.as_point());
        out << ',' << format_double(t.return_time1) << ',' << format_double(t.return_time2)
            << ',' << (t.detected1 ? 1 : 0) << ',' << (t.detected2 ? 1 : 0) << ',';
        if (t.detected1) out << t.observable1;
        out << ',';
        if (t.detected2) out << t.observable2;
        out << '\n';
    }
}

void write_yield_csv(std::ostream& out, std::span<const spacetime::YieldPoint> curve) {
    out << "margin,yield\n";
    for (const spacetime::YieldPoint& point : curve)
        out << format_double(point.margin) << ',' << format_double(point.yield) << '\n';
}

}  // namespace gaugesim
