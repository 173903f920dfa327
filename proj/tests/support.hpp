#pragma once

#include "milnum/error.hpp"
#include "milnum/newton_polyhedron.hpp"
#include "milnum/parser.hpp"
#include "milnum/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace testing {

using milnum::ExponentSet;
using milnum::ExponentVector;
using milnum::Rational;

inline milnum::NewtonPolyhedron poly(const ExponentSet& points)
{
    return milnum::newton_polyhedron(points, points.front().size());
}

inline milnum::NewtonPolyhedron poly_of(const std::string& text)
{
    return milnum::newton_polyhedron(milnum::parse_map(text).component(0));
}

inline milnum::RationalVector q_of(std::initializer_list<std::int64_t> entries)
{
    milnum::RationalVector q;
    for (auto e : entries) q.push_back(Rational(static_cast<long>(e)));
    return q;
}

/// Random support in Z_{>=0}^n without the origin. Convenient supports get one
/// axis point per coordinate (counted in `max_points`).
inline ExponentSet random_support(std::mt19937_64& rng, std::size_t n, std::int64_t max_exponent,
                                  std::size_t max_points, bool convenient)
{
    std::uniform_int_distribution<std::int64_t> coord(0, max_exponent);
    std::uniform_int_distribution<std::int64_t> intercept(1, max_exponent);
    std::uniform_int_distribution<std::size_t> count(convenient ? n : 1, max_points);
    std::set<std::vector<std::int64_t>> points;
    if (convenient) {
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::int64_t> e(n, 0);
            e[i] = intercept(rng);
            points.insert(e);
        }
    }
    const std::size_t target = count(rng);
    while (points.size() < target) {
        std::vector<std::int64_t> e(n);
        for (auto& c : e) c = coord(rng);
        if (std::any_of(e.begin(), e.end(), [](std::int64_t c) { return c != 0; })) points.insert(e);
    }
    ExponentSet out;
    for (const auto& e : points) out.emplace_back(e);
    return out;
}

/// Text form of a germ with unit coefficients on the given supports.
inline std::string germ_text(const std::vector<ExponentSet>& supports)
{
    const auto names = milnum::default_variable_names(supports.front().front().size());
    std::string text;
    for (std::size_t i = 0; i < supports.size(); ++i) {
        if (i) text += "; ";
        for (std::size_t t = 0; t < supports[i].size(); ++t) {
            if (t) text += " + ";
            std::string mono;
            for (std::size_t k = 0; k < names.size(); ++k) {
                const auto e = supports[i][t][k];
                if (e == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names[k];
                if (e > 1) mono += "^" + std::to_string(e);
            }
            text += mono;
        }
    }
    return text;
}

/// Area of R_{>=0}^2 below the Newton boundary, from the lower convex chain of
/// the support and the shoelace formula. Requires a convenient support.
inline Rational staircase_covolume(const ExponentSet& support)
{
    std::vector<std::pair<std::int64_t, std::int64_t>> pts;
    std::int64_t x_axis = -1, y_axis = -1;
    for (const auto& e : support) {
        pts.emplace_back(e[0], e[1]);
        if (e[1] == 0 && e[0] > 0 && (x_axis < 0 || e[0] < x_axis)) x_axis = e[0];
        if (e[0] == 0 && e[1] > 0 && (y_axis < 0 || e[1] < y_axis)) y_axis = e[1];
    }
    // Only points left of the x intercept and below the y intercept can touch the boundary.
    std::sort(pts.begin(), pts.end());
    std::vector<std::pair<std::int64_t, std::int64_t>> chain;
    auto cross = [](auto o, auto a, auto b) {
        return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
    };
    for (const auto& pt : pts) {
        if (pt.first > x_axis || pt.second > y_axis) continue;
        if (!chain.empty() && chain.back().first == pt.first) continue;  // same column, larger y
        while (chain.size() >= 2 && cross(chain[chain.size() - 2], chain.back(), pt) <= 0) chain.pop_back();
        chain.push_back(pt);
    }
    // The chain runs from (0, y_axis) to (x_axis, 0); close it through the origin.
    std::int64_t twice = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> polygon{{0, 0}};
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) polygon.push_back(*it);
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        const auto& a = polygon[i];
        const auto& b = polygon[(i + 1) % polygon.size()];
        twice += a.first * b.second - a.second * b.first;
    }
    return milnum::make_rational(std::abs(twice), 2);
}

}  // namespace testing
