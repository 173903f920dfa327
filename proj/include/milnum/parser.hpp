#pragma once

#include "milnum/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace milnum {

struct ParseOptions {
    /// Explicit variable names in coordinate order. When absent, the conventions
    /// x,y,z,w or x1..xn apply.
    std::optional<std::vector<std::string>> variables;
    /// Declared ambient dimension; inferred from the variables when absent.
    std::optional<std::size_t> dimension;
};

/// Parses "poly (; poly)*" into a germ.
///
/// Grammar:
///   map    := poly (";" poly)*
///   poly   := ["+"|"-"] term (("+"|"-") term)*
///   term   := [coef "*"] factor ("*" factor)*
///   factor := var ["^" nat]
///   coef   := rational | "(" ["-"] [rational] ["i"] [("+"|"-") [rational] "i"] ")"
///
/// Floating literals are rejected. Errors: syntax (with position), zero
/// polynomial after combining, nonzero constant term, p > n.
AnalyticMapGerm parse_map(std::string_view text, const ParseOptions& options = {});

/// Parses the JSON support format
///   {"n": int, "components": [[[e1,...,en], ...], ...], "coefficients": [[c, ...], ...]}
/// where coefficients are optional and default to 1.
AnalyticMapGerm parse_support_json(std::string_view text);

inline ExponentSet support(const Polynomial& h) { return h.support(); }

}  // namespace milnum
