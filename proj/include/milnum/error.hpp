#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace milnum {

/// Machine-readable error categories. The CLI reports these verbatim.
enum class ErrorCode {
    syntax_error,
    zero_polynomial,
    constant_term,
    too_many_components,
    dimension_mismatch,
    invalid_argument,
    non_convenient,
    singular_system,
    interpolation_mismatch,
    no_stabilization,
    mode_requires_p1,
    io_error,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Syntax error annotated with the byte offset into the parsed text.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(ErrorCode::syntax_error,
                message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace milnum
