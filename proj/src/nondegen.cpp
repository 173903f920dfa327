#include "milnum/nondegen.hpp"

#include "milnum/error.hpp"
#include "milnum/mixed.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace milnum {

std::vector<Rational> FaceSystem::values() const
{
    std::vector<Rational> out;
    out.reserve(faces.size());
    for (const auto& f : faces) out.push_back(f.value);
    return out;
}

FaceSystem face_system(const AnalyticMapGerm& germ, std::span<const Rational> q)
{
    FaceSystem system;
    system.direction.assign(q.begin(), q.end());
    for (const auto& f : germ.components()) {
        const NewtonPolyhedron gamma = newton_polyhedron(f);
        Face face = face_of_direction(gamma, q);
        system.polynomials.push_back(face_function(f, face));
        system.faces.push_back(std::move(face));
    }
    return system;
}

bool satisfies_euler_relation(const Polynomial& h, std::span<const Rational> q, const Rational& d)
{
    return h.euler_operator(q) == h.scaled(d);
}

DegeneracyMatrix degeneracy_matrix(const AnalyticMapGerm& germ)
{
    const std::size_t n = germ.dimension();
    const std::size_t p = germ.component_count();
    DegeneracyMatrix m;
    m.rows = p;
    m.columns = n + p;
    m.entries.assign(p, std::vector<Polynomial>(n + p, Polynomial(n)));
    for (std::size_t i = 0; i < p; ++i) {
        const auto& f = germ.component(i);
        for (std::size_t j = 0; j < n; ++j) m.entries[i][j] = f.log_derivative(j);
        m.entries[i][n + i] = f;
    }
    return m;
}

std::vector<ExportedFace> enumerate_face_systems(const AnalyticMapGerm& germ)
{
    const std::size_t n = germ.dimension();
    const std::size_t p = germ.component_count();
    const auto polyhedra = newton_polyhedra(germ);
    const std::vector<std::int64_t> ones(p, 1);
    const NewtonPolyhedron sum = minkowski_weighted_sum(polyhedra, ones);
    const ExponentSet& vertices = sum.vertices();

    // Supporting hyperplanes: proper facets plus the coordinate hyperplanes x_i = 0.
    std::vector<RationalVector> normals;
    std::vector<Rational> offsets;
    for (const auto& f : sum.facets()) {
        normals.push_back(f.normal);
        offsets.push_back(f.offset);
    }
    for (std::size_t i = 0; i < n; ++i) {
        RationalVector e(n, Rational(0));
        e[i] = 1;
        normals.push_back(std::move(e));
        offsets.emplace_back(0);
    }

    using VertexSet = std::vector<std::size_t>;
    std::vector<VertexSet> incidence;
    for (std::size_t h = 0; h < normals.size(); ++h) {
        VertexSet s;
        for (std::size_t v = 0; v < vertices.size(); ++v)
            if (vertices[v].dot(normals[h]) == offsets[h]) s.push_back(v);
        incidence.push_back(std::move(s));
    }

    std::set<VertexSet> faces;
    std::vector<VertexSet> frontier;
    for (const auto& s : incidence)
        if (!s.empty() && faces.insert(s).second) frontier.push_back(s);
    while (!frontier.empty()) {
        std::vector<VertexSet> next;
        for (const auto& a : frontier) {
            for (const auto& b : incidence) {
                VertexSet c;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
                if (!c.empty() && faces.insert(c).second) next.push_back(std::move(c));
            }
        }
        frontier = std::move(next);
    }
    std::vector<ExportedFace> out;
    std::set<ExponentSet> seen;
    for (const auto& s : faces) {
        RationalVector q(n, Rational(0));
        for (std::size_t h = 0; h < normals.size(); ++h) {
            const auto& inc = incidence[h];
            if (!std::includes(inc.begin(), inc.end(), s.begin(), s.end())) continue;
            for (std::size_t k = 0; k < n; ++k) q[k] += normals[h][k];
        }
        if (std::any_of(q.begin(), q.end(), [](const Rational& x) { return sgn(x) <= 0; })) continue;
        Face sigma = face_of_direction(sum, q);
        if (!seen.insert(sigma.vertices).second) continue;

        ExportedFace ef;
        ef.dimension = sigma.dimension();
        ef.in_b_sigma_scope = ef.dimension + 1 <= p;
        const auto parts = decompose_face(sigma, polyhedra);
        ef.system.direction = q;
        for (std::size_t i = 0; i < p; ++i) {
            ef.system.polynomials.push_back(face_function(germ.component(i), parts[i]));
            ef.system.faces.push_back(parts[i]);
        }
        ef.sum_face = std::move(sigma);
        out.push_back(std::move(ef));
    }
    std::sort(out.begin(), out.end(), [](const ExportedFace& a, const ExportedFace& b) {
        if (a.dimension != b.dimension) return a.dimension < b.dimension;
        return a.sum_face.vertices < b.sum_face.vertices;
    });
    return out;
}

namespace {

nlohmann::json terms_json(const Polynomial& poly)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : poly.terms())
        terms.push_back({{"coefficient", c.to_string()},
                         {"exponent", std::vector<std::int64_t>(e.entries().begin(), e.entries().end())}});
    return terms;
}

std::vector<std::string> rational_strings(std::span<const Rational> values)
{
    std::vector<std::string> out;
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

}  // namespace

std::string export_face_systems(const AnalyticMapGerm& germ)
{
    nlohmann::json doc;
    doc["n"] = germ.dimension();
    doc["p"] = germ.component_count();
    doc["faces"] = nlohmann::json::array();
    for (const auto& ef : enumerate_face_systems(germ)) {
        nlohmann::json face;
        face["q"] = rational_strings(ef.system.direction);
        const auto d = ef.system.values();
        face["d"] = rational_strings(d);
        face["dimension"] = ef.dimension;
        face["b_sigma_scope"] = ef.in_b_sigma_scope;
        nlohmann::json systems = nlohmann::json::array();
        for (const auto& poly : ef.system.polynomials) systems.push_back(terms_json(poly));
        face["systems"] = std::move(systems);
        nlohmann::json verts = nlohmann::json::array();
        for (const auto& v : ef.sum_face.vertices)
            verts.push_back(std::vector<std::int64_t>(v.entries().begin(), v.entries().end()));
        face["vertices"] = std::move(verts);
        doc["faces"].push_back(std::move(face));
    }
    return doc.dump(2);
}

}  // namespace milnum
