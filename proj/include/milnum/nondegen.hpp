#pragma once

#include "milnum/newton_polyhedron.hpp"
#include "milnum/polynomial.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace milnum {

/// The face system (f^1)_{s_1}, ..., (f^p)_{s_p} of a direction q.
struct FaceSystem {
    RationalVector direction;
    std::vector<Face> faces;
    std::vector<Polynomial> polynomials;

    /// d(q, Gamma_+(f^i)) per component.
    std::vector<Rational> values() const;
};

/// q >= 0, q != 0. Each face is Delta(q, Gamma_+(f^i)).
FaceSystem face_system(const AnalyticMapGerm& germ, std::span<const Rational> q);

/// Exact check of sum_i q_i x_i dh/dx_i == d * h.
bool satisfies_euler_relation(const Polynomial& h, std::span<const Rational> q, const Rational& d);

/// p x (n+p) matrix: x_j df^i/dx_j in the first n columns, f^i on the diagonal
/// of the last p columns, zero polynomials elsewhere.
struct DegeneracyMatrix {
    std::size_t rows = 0;
    std::size_t columns = 0;
    std::vector<std::vector<Polynomial>> entries;

    const Polynomial& at(std::size_t i, std::size_t j) const { return entries.at(i).at(j); }
};

DegeneracyMatrix degeneracy_matrix(const AnalyticMapGerm& germ);

/// A compact face sigma of Gamma_+(f^1) + ... + Gamma_+(f^p) with its decomposition.
struct ExportedFace {
    Face sum_face;
    std::size_t dimension = 0;
    /// dim(sigma) <= p - 1, the range the (B_sigma) condition quantifies over.
    bool in_b_sigma_scope = false;
    FaceSystem system;
};

/// Every compact face of the Minkowski sum, found by closing the facet vertex
/// sets (coordinate hyperplanes included) under intersection; each face is
/// addressed by the sum of the normals of the facets containing it. Faces are
/// deduplicated by vertex set and sorted by (dimension, vertices).
std::vector<ExportedFace> enumerate_face_systems(const AnalyticMapGerm& germ);

/// JSON bundle {"n", "p", "faces": [{"q", "d", "dimension", "b_sigma_scope", "systems"}]}
/// where each system is a list of {"coefficient", "exponent"} terms.
std::string export_face_systems(const AnalyticMapGerm& germ);

}  // namespace milnum
