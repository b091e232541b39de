#include "renyicc/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace renyicc {

double round12(double x) {
    if (!std::isfinite(x) || x == 0.0) {
        return x == 0.0 ? 0.0 : x;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

nlohmann::json order_json(Order order) {
    if (order.is_infinite()) {
        return "inf";
    }
    return round12(order.value());
}

namespace {

nlohmann::json rounded_map(const std::map<std::string, double>& m) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [key, value] : m) {
        out[key] = round12(value);
    }
    return out;
}

std::string csv_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

} // namespace

nlohmann::json to_json(const BoundReport& report) {
    return {
        {"theorem_tag", report.theorem_tag},
        {"value_bits", round12(report.value_bits)},
        {"value_bits_floored", round12(report.value_bits_floored())},
        {"optimizer", order_json(report.optimizer)},
        {"eps", round12(report.eps)},
        {"params", rounded_map(report.params)},
        {"companions", rounded_map(report.companions)},
    };
}

nlohmann::json to_json(const EmbezzleResult& result) {
    nlohmann::json out = {
        {"d", result.d},
        {"fidelity", round12(result.fidelity)},
        {"target", result.target},
        {"target_length", result.target_length},
        {"eps_target", nullptr},
        {"predecessor", nullptr},
    };
    if (result.eps_target) {
        out["eps_target"] = round12(*result.eps_target);
    }
    if (result.predecessor_d) {
        out["predecessor"] = {{"d", *result.predecessor_d},
                              {"fidelity", round12(result.predecessor_fidelity.value_or(0.0))}};
    }
    return out;
}

std::string sweep_csv(const BoundReport& report, const std::string& family, const std::string& param) {
    std::ostringstream out;
    out << "family,param,eps,beta,bound_bits\n";
    const bool alpha_indexed = report.theorem_tag == "state_approx" ||
                               report.theorem_tag == "function_promise";
    for (const auto& point : report.sweep) {
        std::string beta;
        if (alpha_indexed && !point.order.is_infinite()) {
            const double a = point.order.value();
            beta = a == 0.5 ? "inf" : csv_number(a / (2.0 * a - 1.0));
        } else {
            beta = point.order.is_infinite() ? "inf" : csv_number(point.order.value());
        }
        out << family << ',' << param << ',' << csv_number(report.eps) << ',' << beta << ','
            << csv_number(point.value_bits) << '\n';
    }
    return out.str();
}

} // namespace renyicc
