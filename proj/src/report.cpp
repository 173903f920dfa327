#include "milnum/report.hpp"

namespace milnum {
namespace {

std::string subset_key(const std::vector<std::size_t>& subset)
{
    std::string key = "[";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) key += ",";
        key += std::to_string(subset[i]);
    }
    return key + "]";
}

nlohmann::json trace_json(const std::vector<std::pair<std::int64_t, Rational>>& trace)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [n, nu] : trace) out.push_back({{"N", n}, {"nu", to_string(nu)}});
    return out;
}

}  // namespace

nlohmann::json report_to_json(const NewtonNumberReport& report, const std::string& mode)
{
    nlohmann::json doc;
    doc["n"] = report.n;
    doc["p"] = report.p;
    doc["mode"] = mode;
    doc["nu"] = to_string(report.nu);
    if (report.mu) doc["mu"] = *report.mu;
    doc["convenient"] = report.convenient;
    if (report.extension_used) doc["extension_used"] = *report.extension_used;
    if (!report.stabilization_trace.empty()) doc["stabilization_trace"] = trace_json(report.stabilization_trace);
    nlohmann::json per_subset = nlohmann::json::object();
    for (const auto& c : report.per_subset) per_subset[subset_key(c.subset)] = to_string(c.contribution);
    doc["per_subset"] = std::move(per_subset);
    doc["constant_term"] = to_string(report.constant_term);
    doc["warnings"] = report.warnings;
    return doc;
}

bool verify_report_json(const nlohmann::json& report)
{
    try {
        const auto n = report.at("n").get<long>();
        const auto p = report.at("p").get<long>();
        Rational total = parse_rational(report.at("constant_term").get<std::string>());
        if (total != ((n - p + 1) % 2 == 0 ? 1 : -1)) return false;
        for (const auto& [key, value] : report.at("per_subset").items()) total += parse_rational(value.get<std::string>());
        const Rational nu = parse_rational(report.at("nu").get<std::string>());
        if (total != nu) return false;
        if (report.contains("mu")) {
            if (!is_integer(nu) || sgn(nu) < 0) return false;
            if (Rational(report.at("mu").get<long>()) != nu) return false;
        }
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

nlohmann::json error_to_json(const Error& error)
{
    nlohmann::json doc;
    doc["error"] = {{"code", error_code_name(error.code())}, {"message", error.what()}};
    if (const auto* s = dynamic_cast<const StabilizationError*>(&error)) doc["stabilization_trace"] = trace_json(s->trace());
    return doc;
}

}  // namespace milnum
