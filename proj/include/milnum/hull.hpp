#pragma once

#include "milnum/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace milnum {

using IntPoint = std::vector<std::int64_t>;

/// Inward half-space <normal, x> >= offset. Normals are primitive integer vectors.
struct Halfspace {
    RationalVector normal;
    Rational offset;

    bool operator==(const Halfspace&) const = default;
};

/// Exact convex hull of a finite point set.
///
/// Indices refer to positions in the input span. Facets and the
/// triangulation are only produced for full-dimensional hulls; lower
/// dimensional input still reports its extreme points and affine dimension.
struct ConvexHull {
    std::size_t dimension = 0;
    std::size_t affine_dimension = 0;
    std::vector<std::size_t> vertices;
    std::vector<Halfspace> facets;
    /// Each facet's incident input points (vertices and boundary points that were inserted).
    std::vector<std::vector<std::size_t>> facet_points;
    /// Full-dimensional simplices of a triangulation (point indices); empty for lower-dimensional input.
    std::vector<std::vector<std::size_t>> simplices;
    Rational volume;

    bool full_dimensional() const noexcept { return affine_dimension == dimension; }
};

/// Beneath-beyond placing triangulation over exact integers. Runs on
/// overflow-checked 128-bit integers and transparently retries with GMP
/// integers when an intermediate value does not fit.
ConvexHull convex_hull(std::span<const RationalVector> points, std::size_t dimension);
ConvexHull convex_hull(std::span<const IntPoint> points, std::size_t dimension);

/// Volume of the convex hull only; vertices and facets are not extracted.
Rational convex_hull_volume(std::span<const IntPoint> points, std::size_t dimension);

/// Dimension of the affine hull of the points (-1 for an empty set is reported as 0).
std::size_t affine_dimension(std::span<const IntPoint> points, std::size_t dimension);

/// A bounded polytope given by (not necessarily extreme) points.
struct RationalPolytope {
    std::size_t dimension = 0;
    std::vector<RationalVector> vertices;
};

/// Euclidean volume; 0 for lower-dimensional input.
Rational polytope_volume(const RationalPolytope& polytope);

}  // namespace milnum
