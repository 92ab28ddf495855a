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

#include "gaugesim/json_io.hpp"

#include <stdexcept>

namespace gaugesim {

namespace {

Json to_json(const consistency::Expectation& e) {
    Json j;
    j["value"] = e.value;
    if (e.exact) j["exact"] = e.exact->to_string();
    return j;
}

Rational mixing_from_json(const nlohmann::json& j) {
    if (!j.contains("m")) return Rational(1);
    const auto& m = j.at("m");
    if (m.is_string()) return Rational::parse(m.get<std::string>());
    if (m.is_number_integer()) return Rational(m.get<std::int64_t>());
    if (m.is_number())
        // Shortest round-trip decimal of the number, read back exactly.
        return Rational::parse(m.dump());
    throw std::invalid_argument("system_from_json: 'm' must be a string or number");
}

}  // namespace

Json to_json(const Argument& argument) {
    if (argument.is_label()) return argument.label_name();
    return argument.radians();
}

Json to_json(const bell::BellEvaluation& evaluation) {
    Json j;
    j["lhs"] = evaluation.lhs;
    j["rhs"] = evaluation.rhs;
    j["violated"] = evaluation.violated;
    j["margin"] = evaluation.margin();
    j["source"] = evaluation.source;
    return j;
}

bell::BellEvaluation bell_evaluation_from_json(const nlohmann::json& j) {
    bell::BellEvaluation evaluation;
    evaluation.lhs = j.at("lhs").get<double>();
    evaluation.rhs = j.at("rhs").get<double>();
    evaluation.violated = j.at("violated").get<bool>();
    evaluation.source = j.at("source").get<std::string>();
    return evaluation;
}

Json to_json(const consistency::ConsistencyReport& report) {
    Json j;
    j["model"] = report.model;
    j["method"] = consistency::method_name(report.method);
    j["tolerance"] = report.tolerance;
    j["pass"] = report.pass;
    j["pairs"] = Json::array();
    for (const consistency::PairCheck& check : report.pairs) {
        Json pair;
        pair["first"] = to_json(check.first);
        pair["second"] = to_json(check.second);
        pair["mean_under_first"] = to_json(check.mean_under_first);
        pair["mean_under_second"] = to_json(check.mean_under_second);
        pair["product_under_first"] = to_json(check.product_under_first);
        pair["product_under_second"] = to_json(check.product_under_second);
        pair["delta_mean"] = check.delta_mean;
        pair["delta_product"] = check.delta_product;
        pair["pass"] = check.pass;
        j["pairs"].push_back(std::move(pair));
    }
    j["common_means"] = Json::array();
    for (const auto& [argument, mean] : report.common_means) {
        Json entry;
        entry["argument"] = to_json(argument);
        entry["mean"] = to_json(mean);
        j["common_means"].push_back(std::move(entry));
    }
    return j;
}

Json to_json(const signaling::ChannelReport& report) {
    const auto optional_number = [](const std::optional<double>& v) -> Json {
        if (!v) return nullptr;
        return *v;
    };
    Json j;
    j["prior_first"] = report.experiment.prior_first;
    j["first_argument"] = to_json(report.experiment.first_argument);
    j["second_argument"] = to_json(report.experiment.second_argument);
    j["receiver_argument"] = to_json(report.experiment.receiver_argument);
    j["trials"] = report.experiment.trials;
    j["seed"] = report.experiment.seed;
    j["consistent"] = report.consistent;
    j["counts"] = {
        {"first_plus", report.counts[0][0]},
        {"first_minus", report.counts[0][1]},
        {"second_plus", report.counts[1][0]},
        {"second_minus", report.counts[1][1]},
    };
    j["posterior_given_plus"] = optional_number(report.posterior_given_plus);
    j["posterior_given_minus"] = optional_number(report.posterior_given_minus);
    j["bound_plus"] = optional_number(report.bound_plus);
    j["bound_minus"] = optional_number(report.bound_minus);
    j["no_signaling"] = report.no_signaling;
    return j;
}

Json to_json(const spacetime::RisetimeStats& stats) {
    Json j;
    j["total_delay"] = stats.total_delay;
    j["mean_completion1"] = stats.mean_completion1;
    j["mean_completion2"] = stats.mean_completion2;
    j["mean_min_side"] = stats.mean_min_side;
    j["mean_max_side"] = stats.mean_max_side;
    j["max_completion"] = stats.max_completion;
    j["histogram_bins"] = stats.histogram.size();
    j["histogram"] = stats.histogram;
    return j;
}

Json to_json(const spacetime::ProtocolSummary& summary) {
    const auto correlations = [](std::span<const spacetime::CorrelationEstimate> estimates) {
        Json list = Json::array();
        for (const spacetime::CorrelationEstimate& estimate : estimates) {
            Json entry;
            entry["first"] = to_json(estimate.first);
            entry["second"] = to_json(estimate.second);
            entry["pairs"] = estimate.pairs;
            entry["product_sum"] = estimate.product_sum;
            entry["correlation"] = estimate.correlation();
            list.push_back(std::move(entry));
        }
        return list;
    };
    Json j;
    j["pairs"] = summary.pairs;
    j["detected1"] = summary.detected1;
    j["detected2"] = summary.detected2;
    j["both_detected"] = summary.both_detected;
    j["yield"] = summary.yield;
    j["causality_ok"] = summary.causality_ok;
    j["risetime"] = to_json(summary.risetime);
    j["detected_correlations"] = correlations(summary.detected_correlations);
    j["full_correlations"] = correlations(summary.full_correlations);
    return j;
}

Json to_json(std::span<const spacetime::YieldPoint> curve) {
    Json j = Json::array();
    for (const spacetime::YieldPoint& point : curve)
        j.push_back({{"margin", point.margin}, {"yield", point.yield}});
    return j;
}

std::shared_ptr<const GaugeSystem> system_from_json(const nlohmann::json& j) {
    const std::string type = j.at("type").get<std::string>();
    const Rational mixing = mixing_from_json(j);
    const bool anticorrelated = j.value("anticorrelated", false);

    if (type == "circle") return std::make_shared<CircleSystem>(mixing, anticorrelated);
    if (type == "kolmogorov-uniform")
        return std::make_shared<UniformCircleSystem>(anticorrelated);
    if (type != "discrete")
        throw std::invalid_argument("system_from_json: unknown type '" + type +
                                    "' (known: discrete, circle, kolmogorov-uniform)");

    std::vector<std::string> outcomes;
    for (const auto& label : j.at("outcomes")) outcomes.push_back(label.get<std::string>());

    std::vector<DiscreteSystem::Column> columns;
    for (const auto& argument : j.at("arguments")) {
        DiscreteSystem::Column column;
        column.name = argument.at("name").get<std::string>();
        for (const auto& sign : argument.at("signs")) column.signs.push_back(sign.get<int>());
        for (const auto& mass : argument.at("masses")) {
            if (mass.is_string())
                column.masses.push_back(Rational::parse(mass.get<std::string>()));
            else if (mass.is_number_integer())
                column.masses.push_back(Rational(mass.get<std::int64_t>()));
            else
                column.masses.push_back(Rational::parse(mass.dump()));
        }
        columns.push_back(std::move(column));
    }

    return std::make_shared<DiscreteSystem>(j.value("name", std::string("custom")),
                                            std::move(outcomes), std::move(columns), mixing,
                                            anticorrelated);
}

}  // namespace gaugesim
