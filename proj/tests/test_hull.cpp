#include "milnum/hull.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace milnum;

namespace {

std::vector<std::size_t> sorted(std::vector<std::size_t> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

// Shoelace area of a simple polygon given in boundary order.
Rational shoelace(const std::vector<IntPoint>& polygon)
{
    Integer twice = 0;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        const auto& a = polygon[i];
        const auto& b = polygon[(i + 1) % polygon.size()];
        twice += Integer(static_cast<long>(a[0] * b[1] - a[1] * b[0]));
    }
    Rational area(abs(twice), 2);
    area.canonicalize();
    return area;
}

}  // namespace

TEST_SUITE("hull")
{
    TEST_CASE("unit square")
    {
        const std::vector<IntPoint> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
        const auto hull = convex_hull(square, 2);
        CHECK(hull.full_dimensional());
        CHECK(sorted(hull.vertices) == std::vector<std::size_t>{0, 1, 2, 3});
        CHECK(hull.facets.size() == 4);
        CHECK(hull.simplices.size() == 2);
        CHECK(hull.volume == 1);
        for (const auto& f : hull.facets)
            for (const auto& x : square) {
                Rational s = 0;
                for (std::size_t i = 0; i < 2; ++i) s += f.normal[i] * x[i];
                CHECK(s >= f.offset);
            }
    }

    TEST_CASE("interior point is not a vertex")
    {
        const std::vector<IntPoint> pts{{0, 0}, {4, 0}, {1, 1}, {4, 4}, {0, 4}};
        const auto hull = convex_hull(pts, 2);
        CHECK(sorted(hull.vertices) == std::vector<std::size_t>{0, 1, 3, 4});
        CHECK(hull.volume == 16);
    }

    TEST_CASE("collinear points are lower-dimensional")
    {
        const std::vector<IntPoint> pts{{0, 0}, {1, 1}, {2, 2}, {5, 5}};
        const auto hull = convex_hull(pts, 2);
        CHECK_FALSE(hull.full_dimensional());
        CHECK(hull.affine_dimension == 1);
        CHECK(sorted(hull.vertices) == std::vector<std::size_t>{0, 3});
        CHECK(hull.volume == 0);
        CHECK(hull.simplices.empty());
        CHECK(affine_dimension(pts, 2) == 1);
    }

    TEST_CASE("unit simplex has volume 1/d!")
    {
        for (std::size_t d = 1; d <= 6; ++d) {
            RationalPolytope simplex{d, {RationalVector(d, 0)}};
            for (std::size_t i = 0; i < d; ++i) {
                RationalVector e(d, 0);
                e[i] = 1;
                simplex.vertices.push_back(e);
            }
            CHECK(polytope_volume(simplex) == Rational(1, factorial(static_cast<unsigned>(d))));
        }
    }

    TEST_CASE("boxes and rational coordinates")
    {
        for (long a = 1; a <= 4; ++a)
            for (long b = 1; b <= 4; ++b) {
                RationalPolytope box{2, {{0, 0}, {Rational(a), 0}, {0, Rational(b)}, {Rational(a), Rational(b)}}};
                CHECK(polytope_volume(box) == a * b);
            }
        RationalPolytope half{2, {{0, 0}, {Rational(1, 2), 0}, {0, Rational(1, 3)}, {Rational(1, 2), Rational(1, 3)}}};
        CHECK(polytope_volume(half) == Rational(1, 6));
        RationalPolytope flat{3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}};
        CHECK(polytope_volume(flat) == 0);
    }

    TEST_CASE("hand polygons")
    {
        // (1,1) lies inside the triangle, so the hull is the triangle of area 9/2.
        RationalPolytope triangle{2, {{0, 0}, {3, 0}, {1, 1}, {0, 3}}};
        CHECK(polytope_volume(triangle) == make_rational(9, 2));
        RationalPolytope kite{2, {{0, 0}, {3, 0}, {2, 2}, {0, 3}}};
        CHECK(polytope_volume(kite) == 6);
        const std::vector<IntPoint> ring{{0, 0}, {3, 0}, {2, 2}, {0, 3}};
        CHECK(shoelace(ring) == 6);
    }

    TEST_CASE("volume does not depend on the order of the points")
    {
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<std::int64_t> coord(0, 9);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t d = 2 + trial % 3;
            std::vector<IntPoint> pts(6 + trial % 10, IntPoint(d));
            for (auto& p : pts)
                for (auto& c : p) c = coord(rng);
            const auto reference = convex_hull(pts, d);
            CHECK(convex_hull_volume(pts, d) == reference.volume);
            Rational simplex_sum = 0;
            for (const auto& s : reference.simplices) {
                RationalPolytope simplex{d, {}};
                for (auto i : s) simplex.vertices.emplace_back(pts[i].begin(), pts[i].end());
                simplex_sum += polytope_volume(simplex);
            }
            if (reference.full_dimensional()) CHECK(simplex_sum == reference.volume);
            for (int shuffle = 0; shuffle < 3; ++shuffle) {
                std::shuffle(pts.begin(), pts.end(), rng);
                const auto again = convex_hull(pts, d);
                CHECK(again.volume == reference.volume);
                CHECK(again.vertices.size() == reference.vertices.size());
                CHECK(again.facets.size() == reference.facets.size());
            }
        }
    }

    TEST_CASE("polygon area matches the shoelace formula")
    {
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<std::int64_t> coord(-20, 20);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<IntPoint> pts(3 + trial % 12, IntPoint(2));
            for (auto& p : pts)
                for (auto& c : p) c = coord(rng);
            const auto hull = convex_hull(pts, 2);
            if (!hull.full_dimensional()) continue;
            // Order the vertices by angle around their centroid.
            std::vector<IntPoint> ring;
            for (auto i : hull.vertices) ring.push_back(pts[i]);
            std::int64_t cx = 0, cy = 0;
            for (const auto& p : ring) cx += p[0], cy += p[1];
            const auto k = static_cast<std::int64_t>(ring.size());
            std::sort(ring.begin(), ring.end(), [&](const IntPoint& a, const IntPoint& b) {
                const auto ax = a[0] * k - cx, ay = a[1] * k - cy, bx = b[0] * k - cx, by = b[1] * k - cy;
                const bool ha = ay < 0 || (ay == 0 && ax < 0), hb = by < 0 || (by == 0 && bx < 0);
                if (ha != hb) return ha < hb;
                return ax * by - ay * bx > 0;
            });
            CHECK(hull.volume == shoelace(ring));
        }
    }

    TEST_CASE("large coordinates leave the 128-bit range")
    {
        const std::int64_t big = std::int64_t{1} << 60;
        const std::vector<IntPoint> pts{{0, 0, 0}, {big, 0, 0}, {0, big, 0}, {0, 0, big}, {1, 1, 1}};
        const auto hull = convex_hull(pts, 3);
        CHECK(hull.vertices.size() == 4);
        Rational expected(Integer(big) * Integer(big) * Integer(big), 6);
        expected.canonicalize();
        CHECK(hull.volume == expected);
    }
}
