#include "milnum/rational.hpp"

#include "milnum/error.hpp"

#include <cctype>

namespace milnum {

const char* error_code_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::syntax_error: return "syntax_error";
    case ErrorCode::zero_polynomial: return "zero_polynomial";
    case ErrorCode::constant_term: return "constant_term";
    case ErrorCode::too_many_components: return "too_many_components";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::non_convenient: return "non_convenient";
    case ErrorCode::singular_system: return "singular_system";
    case ErrorCode::interpolation_mismatch: return "interpolation_mismatch";
    case ErrorCode::no_stabilization: return "no_stabilization";
    case ErrorCode::mode_requires_p1: return "mode_requires_p1";
    case ErrorCode::io_error: return "io_error";
    }
    return "unknown";
}

std::string to_string(const Rational& value)
{
    Rational v = value;
    v.canonicalize();
    return v.get_str();
}

Rational parse_rational(std::string_view text)
{
    auto bad = [&] { return Error(ErrorCode::invalid_argument, "not a rational number: '" + std::string(text) + "'"); };
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    const std::size_t digits_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits_start) throw bad();
    if (i < text.size()) {
        if (text[i] != '/') throw bad();
        const std::size_t den_start = ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_start || i != text.size()) throw bad();
    }
    std::string s(text);
    if (s.front() == '+') s.erase(0, 1);
    Rational r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw bad();
    r.canonicalize();
    return r;
}

Integer factorial(unsigned k)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), k);
    return out;
}

}  // namespace milnum
