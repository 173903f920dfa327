#pragma once

#include "milnum/error.hpp"
#include "milnum/mixed.hpp"

#include <json.hpp>

#include <string>

namespace milnum {

/// {n, p, mode, nu, mu?, convenient, extension_used?, stabilization_trace?,
///  per_subset: {"[i,...]": contribution}, constant_term, warnings}.
/// Rationals are "a/b" strings; keys are emitted in sorted order.
nlohmann::json report_to_json(const NewtonNumberReport& report, const std::string& mode);

/// Recomputes nu from per_subset and constant_term. False on any schema problem.
bool verify_report_json(const nlohmann::json& report);

/// {"error": {"code", "message"}} plus "stabilization_trace" for StabilizationError.
nlohmann::json error_to_json(const Error& error);

}  // namespace milnum
