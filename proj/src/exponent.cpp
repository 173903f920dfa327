#include "milnum/exponent.hpp"

#include "milnum/error.hpp"

#include <algorithm>

namespace milnum {

ExponentVector::ExponentVector(std::vector<std::int64_t> entries) : entries_(std::move(entries))
{
    for (auto e : entries_)
        if (e < 0) throw Error(ErrorCode::invalid_argument, "exponent entries must be non-negative");
}

void ExponentVector::set(std::size_t i, std::int64_t value)
{
    if (value < 0) throw Error(ErrorCode::invalid_argument, "exponent entries must be non-negative");
    entries_.at(i) = value;
}

std::int64_t ExponentVector::total_degree() const
{
    std::int64_t s = 0;
    for (auto e : entries_) s += e;
    return s;
}

bool ExponentVector::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](auto e) { return e == 0; });
}

bool ExponentVector::leq(const ExponentVector& other) const
{
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] > other.entries_[i]) return false;
    return true;
}

bool ExponentVector::on_axis(std::size_t axis) const
{
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (i != axis && entries_[i] != 0) return false;
    return entries_[axis] > 0;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const
{
    ExponentVector out(*this);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += other.entries_[i];
    return out;
}

ExponentVector ExponentVector::scaled(std::int64_t factor) const
{
    ExponentVector out(*this);
    for (auto& e : out.entries_) e *= factor;
    return out;
}

Rational ExponentVector::dot(std::span<const Rational> q) const
{
    Rational s = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != 0) s += q[i] * Rational(static_cast<long>(entries_[i]));
    return s;
}

std::string ExponentVector::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(entries_[i]);
    }
    return out + ")";
}

void canonicalize(ExponentSet& points)
{
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
}

ExponentSet minimal_points(ExponentSet points)
{
    canonicalize(points);
    // After lexicographic sorting a dominating point always comes after the point it dominates.
    ExponentSet kept;
    for (const auto& p : points) {
        bool dominated = false;
        for (const auto& k : kept) {
            if (k.leq(p)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(p);
    }
    return kept;
}

}  // namespace milnum
