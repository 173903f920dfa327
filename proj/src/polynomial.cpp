#include "milnum/polynomial.hpp"

#include "milnum/error.hpp"

#include <algorithm>

namespace milnum {

GaussianRational& GaussianRational::operator+=(const GaussianRational& other)
{
    re += other.re;
    im += other.im;
    return *this;
}

GaussianRational GaussianRational::operator*(const Rational& factor) const
{
    return {re * factor, im * factor};
}

std::string GaussianRational::to_string() const
{
    if (sgn(im) == 0) return milnum::to_string(re);
    std::string out = "(" + milnum::to_string(re);
    out += sgn(im) > 0 ? "+" : "-";
    out += milnum::to_string(Rational(abs(im))) + "i)";
    return out;
}

void Polynomial::add_term(const GaussianRational& coefficient, const ExponentVector& exponent)
{
    if (exponent.size() != dimension_)
        throw Error(ErrorCode::dimension_mismatch, "term exponent has wrong length");
    if (coefficient.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ExponentSet Polynomial::support() const
{
    ExponentSet out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back(e);
    return out;
}

bool Polynomial::has_constant_term() const
{
    return !terms_.empty() && terms_.begin()->first.is_zero();
}

Polynomial Polynomial::log_derivative(std::size_t j) const
{
    Polynomial out(dimension_);
    for (const auto& [e, c] : terms_)
        if (e[j] != 0) out.add_term(c * Rational(static_cast<long>(e[j])), e);
    return out;
}

Polynomial Polynomial::euler_operator(std::span<const Rational> q) const
{
    Polynomial out(dimension_);
    for (const auto& [e, c] : terms_) out.add_term(c * e.dot(q), e);
    return out;
}

Polynomial Polynomial::scaled(const Rational& factor) const
{
    Polynomial out(dimension_);
    for (const auto& [e, c] : terms_) out.add_term(c * factor, e);
    return out;
}

Polynomial Polynomial::restricted(std::span<const std::size_t> coords) const
{
    Polynomial out(coords.size());
    for (const auto& [e, c] : terms_) {
        std::int64_t outside = e.total_degree();
        std::vector<std::int64_t> projected;
        projected.reserve(coords.size());
        for (auto i : coords) {
            projected.push_back(e[i]);
            outside -= e[i];
        }
        if (outside == 0) out.add_term(c, ExponentVector(std::move(projected)));
    }
    return out;
}

Polynomial Polynomial::terms_on_level(std::span<const Rational> q, const Rational& value) const
{
    Polynomial out(dimension_);
    for (const auto& [e, c] : terms_)
        if (e.dot(q) == value) out.add_term(c, e);
    return out;
}

AnalyticMapGerm::AnalyticMapGerm(std::size_t n, std::vector<Polynomial> components)
    : n_(n), components_(std::move(components))
{
    if (n_ == 0) throw Error(ErrorCode::invalid_argument, "ambient dimension must be positive");
    if (components_.empty()) throw Error(ErrorCode::invalid_argument, "a map germ needs at least one component");
    if (components_.size() > n_)
        throw Error(ErrorCode::too_many_components,
                    "number of components p=" + std::to_string(components_.size()) +
                        " exceeds ambient dimension n=" + std::to_string(n_));
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const auto& c = components_[i];
        if (c.dimension() != n_)
            throw Error(ErrorCode::dimension_mismatch, "component " + std::to_string(i + 1) + " has wrong dimension");
        if (c.is_zero())
            throw Error(ErrorCode::zero_polynomial, "component " + std::to_string(i + 1) + " is the zero polynomial");
        if (c.has_constant_term())
            throw Error(ErrorCode::constant_term,
                        "component " + std::to_string(i + 1) + " has a nonzero constant term (germ must vanish at 0)");
    }
}

std::vector<ExponentSet> AnalyticMapGerm::supports() const
{
    std::vector<ExponentSet> out;
    out.reserve(components_.size());
    for (const auto& c : components_) out.push_back(c.support());
    return out;
}

std::vector<std::string> default_variable_names(std::size_t n)
{
    static const char* small[] = {"x", "y", "z", "w"};
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back(n <= 4 ? std::string(small[i]) : "x" + std::to_string(i + 1));
    return names;
}

std::string to_text(const Polynomial& poly, std::span<const std::string> names)
{
    if (poly.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : poly.terms()) {
        std::string monomial;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!monomial.empty()) monomial += "*";
            monomial += names[i];
            if (e[i] != 1) monomial += "^" + std::to_string(e[i]);
        }
        bool negative = false;
        std::string coefficient;
        if (sgn(c.im) == 0) {
            negative = sgn(c.re) < 0;
            Rational magnitude = abs(c.re);
            if (magnitude != 1 || monomial.empty()) coefficient = to_string(magnitude);
        } else {
            coefficient = c.to_string();
        }
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (!coefficient.empty()) out += monomial.empty() ? coefficient : coefficient + "*";
        out += monomial;
    }
    return out;
}

std::string to_text(const Polynomial& poly)
{
    auto names = default_variable_names(poly.dimension());
    return to_text(poly, names);
}

std::string to_text(const AnalyticMapGerm& germ)
{
    auto names = default_variable_names(germ.dimension());
    std::string out;
    for (std::size_t i = 0; i < germ.component_count(); ++i) {
        if (i) out += "; ";
        out += to_text(germ.component(i), names);
    }
    return out;
}

}  // namespace milnum
