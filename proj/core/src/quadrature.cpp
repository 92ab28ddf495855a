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

#include "gaugesim/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "gaugesim/angles.hpp"

namespace gaugesim {

namespace {

GaussLegendreRule compute_rule(int order) {
    if (order < 1)
        throw std::invalid_argument("GaussLegendreRule: order must be positive");
    GaussLegendreRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi's initial guess for the i-th root of P_n.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double derivative = 0.0;
        for (int iteration = 0; iteration < 100; ++iteration) {
            // Evaluate P_n(x) and P_{n-1}(x) by the three-term recurrence.
            double p0 = 1.0, p1 = 0.0;
            for (int n = 0; n < order; ++n) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * n + 1.0) * x * p1 - n * p2) / (n + 1.0);
            }
            derivative = order * (x * p0 - p1) / (x * x - 1.0);
            const double step = p0 / derivative;
            x -= step;
            if (std::abs(step) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * derivative * derivative);
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    return rule;
}

}  // namespace

const GaussLegendreRule& GaussLegendreRule::of_order(int order) {
    static std::mutex mutex;
    static std::map<int, GaussLegendreRule> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
    return it->second;
}

double integrate_interval(const std::function<double(double)>& f, double a, double b,
                          int order) {
    const GaussLegendreRule& rule = GaussLegendreRule::of_order(order);
    const double mid = 0.5 * (a + b);
    const double halfwidth = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < order; ++i)
        sum += rule.weights[i] * f(mid + halfwidth * rule.nodes[i]);
    return sum * halfwidth;
}

std::vector<double> normalize_breakpoints(std::span<const double> breakpoints) {
    std::vector<double> points;
    points.reserve(breakpoints.size());
    for (double b : breakpoints) points.push_back(wrap_angle(b));
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end(),
                             [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                 points.end());
    return points;
}

double integrate_circle(const std::function<double(double)>& f,
                        std::span<const double> breakpoints, int order) {
    const std::vector<double> points = normalize_breakpoints(breakpoints);
    const auto wrapped = [&f](double x) { return f(wrap_angle(x)); };
    if (points.empty())
        return integrate_interval(wrapped, 0.0, two_pi, order);

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        total += integrate_interval(wrapped, points[i], points[i + 1], order);
    total += integrate_interval(wrapped, points.back(), points.front() + two_pi, order);
    return total;
}

double integrate_circle_checked(const std::function<double(double)>& f,
                                std::span<const double> breakpoints, int order,
                                double stability) {
    const double coarse = integrate_circle(f, breakpoints, order);
    const double fine = integrate_circle(f, breakpoints, 2 * order);
    if (std::abs(coarse - fine) > stability)
        throw std::runtime_error("quadrature: piece estimate unstable (undeclared breakpoint?)");
    return coarse;
}

}  // namespace gaugesim
