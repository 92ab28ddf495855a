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

#include "gaugesim/consistency.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "gaugesim/quadrature.hpp"

namespace gaugesim::consistency {

std::string method_name(Method method) {
    switch (method) {
        case Method::exact: return "exact";
        case Method::quadrature: return "quadrature";
        case Method::monte_carlo: return "monte-carlo";
    }
    return "unknown";
}

namespace {

void check_observed_count(std::span<const Argument> observed) {
    if (observed.empty() || observed.size() > 2)
        throw std::invalid_argument("parametric_expectation: product of one or two observables");
}

Expectation evaluate(const GaugeSystem& sys, const Argument& dist_arg,
                     std::span<const Argument> observed) {
    Expectation e;
    if (const auto* discrete = dynamic_cast<const DiscreteSystem*>(&sys)) {
        e.exact = discrete->expectation_exact(dist_arg, observed);
        e.value = e.exact->to_double();
    } else {
        e.value = expectation_quadrature(dynamic_cast<const ContinuousSystem&>(sys), dist_arg,
                                         observed);
    }
    return e;
}

using Evaluator = std::function<Expectation(const Argument& dist_arg,
                                            std::span<const Argument> observed)>;

ConsistencyReport run_checks(const GaugeSystem& sys, std::span<const Argument> arguments,
                             Method method, double tolerance, const Evaluator& evaluate_one) {
    if (arguments.size() < 2)
        throw std::invalid_argument("verify: need at least two arguments");
    for (const Argument& u : arguments) sys.validate_argument(u);

    ConsistencyReport report;
    report.model = sys.name();
    report.method = method;
    report.tolerance = tolerance;
    report.pass = true;

    const auto delta = [](const Expectation& lhs, const Expectation& rhs) {
        return std::abs(lhs.value - rhs.value);
    };
    const auto exact_equal = [](const Expectation& lhs, const Expectation& rhs) {
        return lhs.exact && rhs.exact && *lhs.exact == *rhs.exact;
    };

    for (const Argument& x : arguments) {
        for (const Argument& y : arguments) {
            if (x == y) continue;
            PairCheck check{x, y, {}, {}, {}, {}};
            const Argument single[] = {x};
            const Argument product[] = {x, y};
            check.mean_under_first = evaluate_one(x, single);
            check.mean_under_second = evaluate_one(y, single);
            check.product_under_first = evaluate_one(x, product);
            check.product_under_second = evaluate_one(y, product);
            check.delta_mean = delta(check.mean_under_first, check.mean_under_second);
            check.delta_product = delta(check.product_under_first, check.product_under_second);
            // Exact rationals compare with zero tolerance regardless of the
            // floating-point view.
            const bool mean_ok = exact_equal(check.mean_under_first, check.mean_under_second) ||
                                 check.delta_mean <= tolerance;
            const bool product_ok =
                exact_equal(check.product_under_first, check.product_under_second) ||
                check.delta_product <= tolerance;
            check.pass = mean_ok && product_ok;
            report.pass = report.pass && check.pass;
            report.pairs.push_back(std::move(check));
        }
    }

    if (report.pass) {
        for (const Argument& x : arguments) {
            const Argument single[] = {x};
            report.common_means.emplace_back(x, evaluate_one(x, single));
        }
    }
    return report;
}

}  // namespace

double expectation_quadrature(const ContinuousSystem& sys, const Argument& dist_arg,
                              std::span<const Argument> observed, int order) {
    check_observed_count(observed);
    sys.validate_argument(dist_arg);
    for (const Argument& u : observed) sys.validate_argument(u);

    const double dist_setting = dist_arg.radians();
    std::vector<double> settings;
    settings.reserve(observed.size());
    for (const Argument& u : observed) settings.push_back(u.radians());

    std::vector<double> breakpoints = sys.density_breakpoints(dist_setting);
    for (double s : settings)
        for (double b : sys.observable_breakpoints(s)) breakpoints.push_back(b);

    const auto integrand = [&sys, dist_setting, &settings](double point) {
        double product = 1.0;
        for (double s : settings) product *= sign_plus(std::cos(point - s));
        return product * sys.density(dist_setting, point);
    };
    return integrate_circle_checked(integrand, breakpoints, order);
}

double parametric_expectation(const GaugeSystem& sys, const Argument& dist_arg,
                              std::span<const Argument> observed) {
    check_observed_count(observed);
    return evaluate(sys, dist_arg, observed).value;
}

double expectation_monte_carlo(const GaugeSystem& sys, const Argument& dist_arg,
                               std::span<const Argument> observed, std::size_t n,
                               std::uint64_t seed, std::uint64_t experiment) {
    check_observed_count(observed);
    if (n == 0)
        throw std::invalid_argument("expectation_monte_carlo: need at least one sample");
    sys.validate_argument(dist_arg);
    for (const Argument& u : observed) sys.validate_argument(u);

    std::int64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        RandomStream stream(seed, substream(experiment, i));
        const Outcome outcome = sys.sample_parametric(dist_arg, stream);
        int product = 1;
        for (const Argument& u : observed) product *= sys.observe(u, outcome);
        sum += product;
    }
    return static_cast<double>(sum) / static_cast<double>(n);
}

ConsistencyReport verify(const GaugeSystem& sys, std::span<const Argument> arguments,
                         std::optional<double> tolerance) {
    const Method method = sys.discrete() ? Method::exact : Method::quadrature;
    const double tol = tolerance.value_or(sys.discrete() ? 0.0 : 1e-9);
    return run_checks(sys, arguments, method, tol,
                      [&sys](const Argument& dist_arg, std::span<const Argument> observed) {
                          return evaluate(sys, dist_arg, observed);
                      });
}

ConsistencyReport verify_monte_carlo(const GaugeSystem& sys,
                                     std::span<const Argument> arguments, std::size_t n,
                                     std::uint64_t seed, std::optional<double> tolerance) {
    const double tol = tolerance.value_or(4.0 * std::sqrt(2.0 / static_cast<double>(n)));
    std::uint64_t experiment = 0;
    return run_checks(sys, arguments, Method::monte_carlo, tol,
                      [&sys, n, seed, &experiment](const Argument& dist_arg,
                                                   std::span<const Argument> observed) {
                          Expectation e;
                          e.value = expectation_monte_carlo(sys, dist_arg, observed, n, seed,
                                                            experiment++);
                          return e;
                      });
}

}  // namespace gaugesim::consistency
