#include "milnum/parser.hpp"

#include "milnum/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <set>

namespace milnum {
namespace {

constexpr std::int64_t max_exponent = 1'000'000'000;

struct RawFactor {
    std::string name;
    std::size_t position;
    std::int64_t exponent;
};

struct RawTerm {
    GaussianRational coefficient;
    std::vector<RawFactor> factors;
};

using RawPoly = std::vector<RawTerm>;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::vector<RawPoly> parse_map()
    {
        std::vector<RawPoly> polys;
        polys.push_back(parse_poly());
        skip_ws();
        while (peek() == ';') {
            ++pos_;
            polys.push_back(parse_poly());
            skip_ws();
        }
        if (!at_end()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return polys;
    }

    GaussianRational parse_standalone_coefficient()
    {
        skip_ws();
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = peek() == '-';
            ++pos_;
            skip_ws();
        }
        GaussianRational c = parse_coefficient();
        skip_ws();
        if (!at_end()) fail("trailing characters after coefficient");
        return negative ? -c : c;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
    static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
    static bool is_ident(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

    RawPoly parse_poly()
    {
        RawPoly poly;
        skip_ws();
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        }
        poly.push_back(parse_term(negative));
        for (;;) {
            skip_ws();
            if (peek() != '+' && peek() != '-') break;
            negative = peek() == '-';
            ++pos_;
            poly.push_back(parse_term(negative));
        }
        return poly;
    }

    RawTerm parse_term(bool negative)
    {
        skip_ws();
        RawTerm term;
        term.coefficient = GaussianRational(Rational(1));
        const char c = peek();
        if (is_digit(c) || c == '(') {
            term.coefficient = parse_coefficient();
            skip_ws();
            if (peek() != '*') {
                if (is_ident_start(peek())) fail("expected '*' between coefficient and variable");
                if (negative) term.coefficient = -term.coefficient;
                return term;
            }
            ++pos_;
        } else if (!is_ident_start(c)) {
            fail(at_end() ? "unexpected end of input, expected a term" : "expected a term");
        }
        term.factors.push_back(parse_factor());
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
            term.factors.push_back(parse_factor());
        }
        if (negative) term.coefficient = -term.coefficient;
        return term;
    }

    RawFactor parse_factor()
    {
        skip_ws();
        if (is_digit(peek()) || peek() == '(') fail("coefficient must lead the term");
        if (!is_ident_start(peek())) fail("expected a variable");
        RawFactor f;
        f.position = pos_;
        const std::size_t start = pos_;
        while (!at_end() && is_ident(text_[pos_])) ++pos_;
        f.name = std::string(text_.substr(start, pos_ - start));
        f.exponent = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            f.exponent = parse_nat();
        }
        return f;
    }

    std::int64_t parse_nat()
    {
        if (!is_digit(peek())) fail("expected a non-negative integer exponent");
        std::int64_t value = 0;
        while (is_digit(peek())) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > max_exponent) fail("exponent too large");
            ++pos_;
        }
        if (peek() == '.') fail("floating-point literals are not allowed");
        return value;
    }

    Rational parse_unsigned_rational()
    {
        if (!is_digit(peek())) fail("expected a number");
        const std::size_t start = pos_;
        while (is_digit(peek())) ++pos_;
        if (peek() == '.' || peek() == 'e' || peek() == 'E') fail("floating-point literals are not allowed");
        std::string literal(text_.substr(start, pos_ - start));
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            const std::size_t den_start = pos_;
            if (!is_digit(peek())) fail("expected a denominator");
            while (is_digit(peek())) ++pos_;
            if (peek() == '.') fail("floating-point literals are not allowed");
            std::string den(text_.substr(den_start, pos_ - den_start));
            if (std::all_of(den.begin(), den.end(), [](char ch) { return ch == '0'; })) fail("zero denominator");
            literal += "/" + den;
        }
        Rational r(literal, 10);
        r.canonicalize();
        return r;
    }

    GaussianRational parse_coefficient()
    {
        skip_ws();
        if (peek() != '(') return GaussianRational(parse_unsigned_rational());
        ++pos_;
        skip_ws();
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = peek() == '-';
            ++pos_;
            skip_ws();
        }
        // A bare "i" stands for a unit imaginary part.
        Rational first = peek() == 'i' ? Rational(1) : parse_unsigned_rational();
        if (negative) first = -first;
        skip_ws();
        GaussianRational out(first);
        if (peek() == 'i') {
            ++pos_;
            out = GaussianRational(Rational(0), first);
        } else if (peek() == '+' || peek() == '-') {
            const bool minus = peek() == '-';
            ++pos_;
            skip_ws();
            Rational imag = peek() == 'i' ? Rational(1) : parse_unsigned_rational();
            skip_ws();
            if (peek() != 'i') fail("expected 'i' after the imaginary part");
            ++pos_;
            out.im = minus ? Rational(-imag) : imag;
        }
        skip_ws();
        if (peek() != ')') fail("expected ')'");
        ++pos_;
        return out;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// Maps a variable name to its 0-based coordinate under the x,y,z,w or x1..xn conventions.
struct Convention {
    enum Kind { none, letters, indexed } kind = none;
};

std::optional<std::size_t> letter_index(const std::string& name)
{
    static const std::map<std::string, std::size_t> letters{{"x", 0}, {"y", 1}, {"z", 2}, {"w", 3}};
    auto it = letters.find(name);
    if (it == letters.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> indexed_index(const std::string& name)
{
    if (name.size() < 2 || name[0] != 'x') return std::nullopt;
    if (name[1] == '0') return std::nullopt;
    std::size_t value = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
        value = value * 10 + static_cast<std::size_t>(name[i] - '0');
        if (value > 100000) return std::nullopt;
    }
    return value - 1;
}

}  // namespace

AnalyticMapGerm parse_map(std::string_view text, const ParseOptions& options)
{
    Parser parser(text);
    std::vector<RawPoly> raw = parser.parse_map();

    std::map<std::string, std::size_t> index_of;
    std::size_t n = 0;

    if (options.variables) {
        const auto& vars = *options.variables;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (!index_of.emplace(vars[i], i).second)
                throw Error(ErrorCode::invalid_argument, "duplicate variable name '" + vars[i] + "'");
        }
        n = vars.size();
        for (const auto& poly : raw)
            for (const auto& term : poly)
                for (const auto& f : term.factors)
                    if (!index_of.contains(f.name)) throw ParseError("unknown variable '" + f.name + "'", f.position);
    } else {
        Convention::Kind kind = Convention::none;
        for (const auto& poly : raw) {
            for (const auto& term : poly) {
                for (const auto& f : term.factors) {
                    std::optional<std::size_t> idx;
                    Convention::Kind this_kind;
                    if ((idx = letter_index(f.name))) {
                        this_kind = Convention::letters;
                    } else if ((idx = indexed_index(f.name))) {
                        this_kind = Convention::indexed;
                    } else {
                        throw ParseError("unknown variable '" + f.name + "' (use x,y,z,w or x1..xn)", f.position);
                    }
                    if (kind != Convention::none && kind != this_kind)
                        throw ParseError("mixing x,y,z,w with x1..xn naming", f.position);
                    kind = this_kind;
                    index_of[f.name] = *idx;
                    n = std::max(n, *idx + 1);
                }
            }
        }
    }

    if (options.dimension) {
        if (*options.dimension < n)
            throw Error(ErrorCode::dimension_mismatch, "declared dimension " + std::to_string(*options.dimension) +
                                                           " is smaller than the number of variables " +
                                                           std::to_string(n));
        n = *options.dimension;
    }
    if (n == 0) throw Error(ErrorCode::constant_term, "input has no variables; a germ must vanish at the origin");

    std::vector<Polynomial> components;
    components.reserve(raw.size());
    for (const auto& poly : raw) {
        Polynomial p(n);
        for (const auto& term : poly) {
            std::vector<std::int64_t> e(n, 0);
            for (const auto& f : term.factors) {
                auto& slot = e[index_of.at(f.name)];
                slot += f.exponent;
                if (slot > max_exponent) throw ParseError("exponent too large", f.position);
            }
            p.add_term(term.coefficient, ExponentVector(std::move(e)));
        }
        components.push_back(std::move(p));
    }
    return AnalyticMapGerm(n, std::move(components));
}

GaussianRational parse_coefficient(const std::string& text)
{
    return Parser(text).parse_standalone_coefficient();
}

AnalyticMapGerm parse_support_json(std::string_view text)
{
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    auto schema = [](const std::string& message) { return Error(ErrorCode::invalid_argument, "support JSON: " + message); };

    if (!doc.is_object()) throw schema("top level must be an object");
    if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<long long>() <= 0)
        throw schema("\"n\" must be a positive integer");
    const auto n = static_cast<std::size_t>(doc["n"].get<long long>());
    if (!doc.contains("components") || !doc["components"].is_array()) throw schema("\"components\" must be an array");
    const json& comps = doc["components"];
    const json* coeffs = nullptr;
    if (doc.contains("coefficients") && !doc["coefficients"].is_null()) {
        coeffs = &doc["coefficients"];
        if (!coeffs->is_array() || coeffs->size() != comps.size())
            throw schema("\"coefficients\" must parallel \"components\"");
    }

    std::vector<Polynomial> components;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const json& pts = comps[i];
        if (!pts.is_array()) throw schema("each component must be an array of exponent vectors");
        if (coeffs && (!(*coeffs)[i].is_array() || (*coeffs)[i].size() != pts.size()))
            throw schema("coefficient list " + std::to_string(i + 1) + " must parallel its exponent list");
        Polynomial p(n);
        for (std::size_t k = 0; k < pts.size(); ++k) {
            const json& e = pts[k];
            if (!e.is_array() || e.size() != n) throw schema("exponent vectors must have length n");
            std::vector<std::int64_t> entries;
            for (const auto& v : e) {
                if (!v.is_number_integer() || v.get<long long>() < 0)
                    throw schema("exponent entries must be non-negative integers");
                entries.push_back(v.get<std::int64_t>());
            }
            GaussianRational c(Rational(1));
            if (coeffs) {
                const json& cj = (*coeffs)[i][k];
                if (cj.is_string())
                    c = parse_coefficient(cj.get<std::string>());
                else if (cj.is_number_integer())
                    c = GaussianRational(Rational(static_cast<long>(cj.get<long long>())));
                else
                    throw schema("coefficients must be integers or rational strings");
            }
            p.add_term(c, ExponentVector(std::move(entries)));
        }
        components.push_back(std::move(p));
    }
    return AnalyticMapGerm(n, std::move(components));
}

}  // namespace milnum
