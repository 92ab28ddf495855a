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

#include "gaugesim/rational.hpp"

#include <cctype>
#include <charconv>

namespace gaugesim {

namespace {

std::int64_t parse_int(std::string_view text) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("Rational::parse: bad integer '" + std::string(text) + "'");
    return value;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    std::size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    const std::string_view body(text.data() + begin, end - begin);
    if (body.empty())
        throw std::invalid_argument("Rational::parse: empty string");

    if (const auto slash = body.find('/'); slash != std::string_view::npos)
        return Rational(parse_int(body.substr(0, slash)), parse_int(body.substr(slash + 1)));

    if (const auto dot = body.find('.'); dot != std::string_view::npos) {
        // Decimal form: scale by a power of ten. "0.25" -> 25/100 -> 1/4.
        const std::string_view whole_text = body.substr(0, dot);
        const std::string_view frac = body.substr(dot + 1);
        if (frac.empty() || frac.size() > 18)
            throw std::invalid_argument("Rational::parse: bad decimal '" + text + "'");
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        const bool negative = body.front() == '-';
        const std::int64_t whole =
            whole_text.empty() || whole_text == "-" || whole_text == "+"
                ? 0
                : parse_int(whole_text);
        const std::int64_t frac_digits = parse_int(frac);
        if (frac_digits < 0)
            throw std::invalid_argument("Rational::parse: bad decimal '" + text + "'");
        const std::int64_t magnitude = (whole < 0 ? -whole : whole) * scale + frac_digits;
        return Rational(negative ? -magnitude : magnitude, scale);
    }

    return Rational(parse_int(body));
}

}  // namespace gaugesim
