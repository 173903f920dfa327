#pragma once

#include "milnum/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace milnum {

/// A lattice point of Z_{>=0}^n: the exponent of a monomial or a support point.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t n) : entries_(n, 0) {}
    explicit ExponentVector(std::vector<std::int64_t> entries);
    ExponentVector(std::initializer_list<std::int64_t> entries)
        : ExponentVector(std::vector<std::int64_t>(entries)) {}

    std::size_t size() const noexcept { return entries_.size(); }
    std::int64_t operator[](std::size_t i) const { return entries_[i]; }
    void set(std::size_t i, std::int64_t value);

    std::span<const std::int64_t> entries() const noexcept { return entries_; }

    std::int64_t total_degree() const;
    bool is_zero() const;
    /// Componentwise <=.
    bool leq(const ExponentVector& other) const;
    /// True when every entry except possibly `axis` is zero and the vector is nonzero.
    bool on_axis(std::size_t axis) const;

    ExponentVector operator+(const ExponentVector& other) const;
    ExponentVector scaled(std::int64_t factor) const;

    Rational dot(std::span<const Rational> q) const;

    std::string to_string() const;

    auto operator<=>(const ExponentVector&) const = default;
    bool operator==(const ExponentVector&) const = default;

private:
    std::vector<std::int64_t> entries_;
};

using ExponentSet = std::vector<ExponentVector>;

/// Sorts and removes duplicates.
void canonicalize(ExponentSet& points);

/// Drops every point that dominates (componentwise >=) another point of the set.
ExponentSet minimal_points(ExponentSet points);

}  // namespace milnum
