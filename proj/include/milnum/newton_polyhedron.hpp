#pragma once

#include "milnum/exponent.hpp"
#include "milnum/polynomial.hpp"
#include "milnum/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace milnum {

/// Facet inequality <normal, x> >= offset of a Newton polyhedron. The
/// coordinate half-spaces x_i >= 0 are implicit and not listed.
struct NewtonFacet {
    RationalVector normal;  ///< primitive, componentwise >= 0
    Rational offset;        ///< > 0

    bool operator==(const NewtonFacet&) const = default;
};

/// The unbounded polyhedron conv(S) + R_{>=0}^n.
///
/// Vertices and facets are computed eagerly from the exact hull of the
/// bounded truncation conv(S) + R_{>=0}^n intersected with [0, M]^n, where M
/// exceeds every coordinate of a minimal generator. The truncation volume is
/// kept so that the covolume of a convenient polyhedron needs no second hull.
class NewtonPolyhedron {
public:
    NewtonPolyhedron(ExponentSet generators, std::size_t n);

    std::size_t dimension() const noexcept { return n_; }
    /// Deduplicated, sorted generator set as given.
    const ExponentSet& generators() const noexcept { return generators_; }
    const ExponentSet& vertices() const noexcept { return vertices_; }
    const std::vector<NewtonFacet>& facets() const noexcept { return facets_; }

    bool is_convenient() const;
    /// Smallest c > 0 with c*e_i a generator, if any.
    std::optional<std::int64_t> axis_intercept(std::size_t axis) const;

    /// Box size of the cached truncation and its volume.
    std::int64_t truncation_box() const noexcept { return box_; }
    const Rational& truncation_volume() const noexcept { return truncation_volume_; }

    /// Membership of a rational point.
    bool contains(std::span<const Rational> x) const;

    /// Same polyhedron (vertex sets agree).
    bool operator==(const NewtonPolyhedron& other) const
    {
        return n_ == other.n_ && vertices_ == other.vertices_;
    }

    /// Debug dump {"dimension", "vertices", "facets"}.
    std::string to_json() const;

private:
    std::size_t n_;
    ExponentSet generators_;
    ExponentSet vertices_;
    std::vector<NewtonFacet> facets_;
    std::int64_t box_ = 0;
    Rational truncation_volume_;
};

NewtonPolyhedron newton_polyhedron(const ExponentSet& points, std::size_t n);
NewtonPolyhedron newton_polyhedron(const Polynomial& h);

inline bool is_convenient(const NewtonPolyhedron& polyhedron) { return polyhedron.is_convenient(); }

/// Points of [0,M]^n-truncation generators: every point with the coordinates in
/// some subset raised to M. Requires M >= every generator coordinate.
std::vector<std::vector<std::int64_t>> box_truncation_points(const ExponentSet& points, std::size_t n,
                                                             std::int64_t box);

/// Gamma intersected with R^I, re-indexed to dimension |I|; empty when no
/// generator is supported on I. `coords` holds sorted 0-based indices.
std::optional<NewtonPolyhedron> restrict(const NewtonPolyhedron& polyhedron, std::span<const std::size_t> coords);

/// Face Delta(q, Gamma) = {x in Gamma : <q,x> = d(q, Gamma)}.
struct Face {
    RationalVector direction;
    Rational value;
    /// Generators of the parent lying on the face.
    ExponentSet points;
    /// Vertices of the parent lying on the face.
    ExponentSet vertices;
    bool compact = false;

    /// Affine dimension of the face polytope (compact faces only).
    std::size_t dimension() const;

    /// Faces are equal when they carry the same generators, regardless of direction.
    bool operator==(const Face& other) const { return points == other.points; }
};

/// Errors: negative entry, zero vector, or wrong length.
Face face_of_direction(const NewtonPolyhedron& polyhedron, std::span<const Rational> q);

/// Minimal points among all sums sum_i weight_i * v_i over vertices v_i of the summands.
ExponentSet minkowski_weighted_generators(std::span<const NewtonPolyhedron> summands,
                                         std::span<const std::int64_t> weights);

/// One vertex index per summand for each vertex of the sum. The normal fan of a
/// Minkowski sum does not change under positive weights, so these tuples give the
/// vertices of every weighted sum.
std::vector<std::vector<std::size_t>> minkowski_vertex_tuples(std::span<const NewtonPolyhedron> summands);

/// Polyhedron generated by all sums sum_i weight_i * v_i over vertices v_i of the summands.
NewtonPolyhedron minkowski_weighted_sum(std::span<const NewtonPolyhedron> summands,
                                        std::span<const std::int64_t> weights);

/// Extreme points of the Minkowski sum of the faces' vertex sets.
ExponentSet minkowski_face_vertices(std::span<const Face> faces);

/// The unique faces sigma_i = Delta(q, Gamma_i) with sigma = sigma_1 + ... + sigma_p.
/// The sum is re-verified against sigma's vertex set. Errors: sigma not compact.
std::vector<Face> decompose_face(const Face& sigma, std::span<const NewtonPolyhedron> summands);

/// The part of h supported on the face (zero polynomial when disjoint).
Polynomial face_function(const Polynomial& h, const Face& face);

}  // namespace milnum
