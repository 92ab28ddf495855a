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

#include "gaugesim/angles.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace gaugesim {

namespace {

// Parses a decimal number from text[pos...], advancing pos. Returns false if
// no digits were consumed.
bool parse_number(const std::string& text, std::size_t& pos, double& out) {
    const char* begin = text.c_str() + pos;
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin) return false;
    pos += static_cast<std::size_t>(end - begin);
    out = value;
    return true;
}

}  // namespace

double parse_angle(const std::string& text) {
    std::size_t pos = 0;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;

    double sign = 1.0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') sign = -1.0;
        ++pos;
    }

    double coefficient = 1.0;
    bool have_coefficient = parse_number(text, pos, coefficient);

    if (pos < text.size() && text[pos] == '*') ++pos;

    bool have_pi = false;
    if (text.compare(pos, 2, "pi") == 0 || text.compare(pos, 2, "PI") == 0) {
        have_pi = true;
        pos += 2;
    }

    double denominator = 1.0;
    bool have_denominator = false;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        if (!parse_number(text, pos, denominator) || denominator == 0.0)
            throw std::invalid_argument("parse_angle: bad denominator in '" + text + "'");
        have_denominator = true;
    }

    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size() || (!have_coefficient && !have_pi) ||
        (have_denominator && !have_pi && !have_coefficient))
        throw std::invalid_argument("parse_angle: cannot parse '" + text + "'");

    // A bare fraction without pi ("3/4") is accepted as plain radians.
    const double value = sign * coefficient * (have_pi ? std::numbers::pi : 1.0) / denominator;
    if (!std::isfinite(value))
        throw std::invalid_argument("parse_angle: non-finite angle '" + text + "'");
    return value;
}

std::string format_angle(double radians) {
    // Prefer an exact "k*pi/12"-style fraction when it round-trips.
    static const int denominators[] = {1, 2, 3, 4, 6, 12};
    for (int den : denominators) {
        const double k = radians * den / std::numbers::pi;
        const double k_rounded = std::round(k);
        if (std::abs(k - k_rounded) < 1e-12 && k_rounded != 0.0) {
            long num = static_cast<long>(k_rounded);
            std::string candidate;
            if (num == 1)
                candidate = "pi";
            else if (num == -1)
                candidate = "-pi";
            else
                candidate = std::to_string(num) + "pi";
            if (den != 1) candidate += "/" + std::to_string(den);
            if (parse_angle(candidate) == radians) return candidate;
        }
    }
    if (radians == 0.0) return "0";

    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, radians);
    return std::string(buffer, result.ptr);
}

}  // namespace gaugesim
