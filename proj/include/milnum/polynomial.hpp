#pragma once

#include "milnum/exponent.hpp"
#include "milnum/rational.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace milnum {

/// Exact Gaussian rational re + im*i.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational real) : re(std::move(real)) {}  // NOLINT: implicit by intent
    GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

    GaussianRational& operator+=(const GaussianRational& other);
    GaussianRational operator*(const Rational& factor) const;
    GaussianRational operator-() const { return {-re, -im}; }

    bool operator==(const GaussianRational& other) const { return re == other.re && im == other.im; }

    /// "a", "a/b", or "(a+bi)" / "(a-bi)" when the imaginary part is nonzero.
    std::string to_string() const;
};

/// Parses the coefficient forms accepted in JSON input: "3", "-1/2", "(1+2i)", "(1/2-3i)".
GaussianRational parse_coefficient(const std::string& text);

/// A polynomial in n variables with exact complex-rational coefficients.
/// Terms are kept combined, zero-free and in lexicographic exponent order.
class Polynomial {
public:
    using TermMap = std::map<ExponentVector, GaussianRational>;

    Polynomial() = default;
    explicit Polynomial(std::size_t dimension) : dimension_(dimension) {}

    std::size_t dimension() const noexcept { return dimension_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Adds a term, combining with an existing equal exponent and dropping zeros.
    void add_term(const GaussianRational& coefficient, const ExponentVector& exponent);

    /// Exponents of the nonzero terms, sorted.
    ExponentSet support() const;

    bool has_constant_term() const;

    /// x_j * d/dx_j.
    Polynomial log_derivative(std::size_t j) const;

    /// sum_i q_i x_i d/dx_i.
    Polynomial euler_operator(std::span<const Rational> q) const;

    Polynomial scaled(const Rational& factor) const;

    /// Restriction to the coordinate subspace C^I, re-indexed to dimension |I|.
    /// `coords` is a sorted list of 0-based indices.
    Polynomial restricted(std::span<const std::size_t> coords) const;

    /// Terms whose exponent satisfies <q, alpha> == value.
    Polynomial terms_on_level(std::span<const Rational> q, const Rational& value) const;

    bool operator==(const Polynomial& other) const = default;

private:
    std::size_t dimension_ = 0;
    TermMap terms_;
};

/// An analytic map germ (f^1, ..., f^p) : (C^n, 0) -> (C^p, 0) given by polynomial
/// representatives. Components are nonzero, vanish at the origin, and p <= n.
class AnalyticMapGerm {
public:
    AnalyticMapGerm(std::size_t n, std::vector<Polynomial> components);

    std::size_t dimension() const noexcept { return n_; }
    std::size_t component_count() const noexcept { return components_.size(); }
    const std::vector<Polynomial>& components() const noexcept { return components_; }
    const Polynomial& component(std::size_t i) const { return components_.at(i); }

    std::vector<ExponentSet> supports() const;

    bool operator==(const AnalyticMapGerm& other) const = default;

private:
    std::size_t n_;
    std::vector<Polynomial> components_;
};

/// Variable names used for serialization: x,y,z,w when n <= 4, else x1..xn.
std::vector<std::string> default_variable_names(std::size_t n);

std::string to_text(const Polynomial& poly, std::span<const std::string> names);
std::string to_text(const Polynomial& poly);
/// Components joined by "; ".
std::string to_text(const AnalyticMapGerm& germ);

}  // namespace milnum
