#pragma once

#include "milnum/newton_polyhedron.hpp"
#include "milnum/rational.hpp"

#include <cstdint>

namespace milnum {

/// vol(R_{>=0}^n \ Gamma) of a convenient Newton polyhedron, computed as
/// M^n - vol(Gamma intersected with [0,M]^n) with the polyhedron's cached truncation.
/// Errors: non-convenient input.
Rational covolume(const NewtonPolyhedron& polyhedron);

/// Covolume of the polyhedron generated by `generators`, without building its
/// vertex and facet description. Errors: generators miss a coordinate axis.
Rational covolume_of_generators(const ExponentSet& generators, std::size_t n);

/// Same quantity with an explicit box size; requires M >= every vertex coordinate.
/// Recomputes the truncation hull from scratch.
Rational covolume_with_box(const NewtonPolyhedron& polyhedron, std::int64_t box);

}  // namespace milnum
