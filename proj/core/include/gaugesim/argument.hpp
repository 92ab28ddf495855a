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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>

#include "gaugesim/angles.hpp"

namespace gaugesim {

/// A measurement setting: either a named label of a discrete system
/// (e.g. "a", "b", "c") or a direction on the unit circle, stored reduced
/// to [0, 2pi).
class Argument {
public:
    static Argument label(std::string name) { return Argument(std::move(name)); }
    static Argument angle(double radians) { return Argument(wrap_angle(radians)); }

    bool is_label() const { return std::holds_alternative<std::string>(value_); }
    bool is_angle() const { return !is_label(); }

    const std::string& label_name() const {
        if (!is_label())
            throw std::invalid_argument("Argument: not a label");
        return std::get<std::string>(value_);
    }

    double radians() const {
        if (!is_angle())
            throw std::invalid_argument("Argument: not an angle");
        return std::get<double>(value_);
    }

    std::string display() const {
        return is_label() ? std::get<std::string>(value_) : format_angle(std::get<double>(value_));
    }

    friend bool operator==(const Argument&, const Argument&) = default;

private:
    explicit Argument(std::string name) : value_(std::move(name)) {}
    explicit Argument(double radians) : value_(radians) {}

    std::variant<std::string, double> value_;
};

/// One element of the basic outcome set: an index into a finite set, or a
/// point on the unit circle.
class Outcome {
public:
    static Outcome index(std::size_t i) { return Outcome(i); }
    static Outcome point(double radians) { return Outcome(wrap_angle(radians)); }

    bool is_index() const { return std::holds_alternative<std::size_t>(value_); }
    bool is_point() const { return !is_index(); }

    std::size_t as_index() const {
        if (!is_index())
            throw std::domain_error("Outcome: not a discrete index");
        return std::get<std::size_t>(value_);
    }

    double as_point() const {
        if (!is_point())
            throw std::domain_error("Outcome: not a circle point");
        return std::get<double>(value_);
    }

    friend bool operator==(const Outcome&, const Outcome&) = default;

private:
    explicit Outcome(std::size_t i) : value_(i) {}
    explicit Outcome(double radians) : value_(radians) {}

    std::variant<std::size_t, double> value_;
};

}  // namespace gaugesim
