#include "milnum/newton_polyhedron.hpp"

#include "milnum/error.hpp"
#include "milnum/hull.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace milnum {

std::vector<std::vector<std::int64_t>> box_truncation_points(const ExponentSet& points, std::size_t n,
                                                             std::int64_t box)
{
    for (const auto& p : points)
        for (std::size_t i = 0; i < n; ++i)
            if (p[i] > box) throw Error(ErrorCode::invalid_argument, "truncation box smaller than a generator");

    // A raised corner is redundant when another generator is no larger on the
    // coordinates left in place, so only minimal projections are kept.
    std::set<std::vector<std::int64_t>> corners;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::size_t> kept;
        for (std::size_t i = 0; i < n; ++i)
            if (!(mask & (std::size_t{1} << i))) kept.push_back(i);
        if (kept.size() == n) {
            for (const auto& p : points) corners.emplace(p.entries().begin(), p.entries().end());
            continue;
        }
        ExponentSet projected;
        projected.reserve(points.size());
        for (const auto& p : points) {
            std::vector<std::int64_t> c(kept.size());
            for (std::size_t k = 0; k < kept.size(); ++k) c[k] = p[kept[k]];
            projected.emplace_back(std::move(c));
        }
        for (const auto& m : minimal_points(std::move(projected))) {
            std::vector<std::int64_t> c(n, box);
            for (std::size_t k = 0; k < kept.size(); ++k) c[kept[k]] = m[k];
            corners.insert(std::move(c));
        }
    }
    return {corners.begin(), corners.end()};
}

NewtonPolyhedron::NewtonPolyhedron(ExponentSet generators, std::size_t n) : n_(n), generators_(std::move(generators))
{
    if (n_ == 0) throw Error(ErrorCode::invalid_argument, "Newton polyhedron needs a positive dimension");
    if (generators_.empty()) throw Error(ErrorCode::invalid_argument, "Newton polyhedron of an empty set");
    for (const auto& g : generators_)
        if (g.size() != n_) throw Error(ErrorCode::dimension_mismatch, "generator " + g.to_string() + " has wrong length");
    canonicalize(generators_);

    const ExponentSet minimal = minimal_points(generators_);
    std::int64_t top = 0;
    for (const auto& g : minimal)
        for (auto c : g.entries()) top = std::max(top, c);
    box_ = top + 1;

    const auto corners = box_truncation_points(minimal, n_, box_);
    const ConvexHull hull = convex_hull(corners, n_);
    truncation_volume_ = hull.volume;

    for (std::size_t idx : hull.vertices) {
        const auto& c = corners[idx];
        if (std::all_of(c.begin(), c.end(), [&](std::int64_t x) { return x < box_; })) vertices_.emplace_back(c);
    }
    std::sort(vertices_.begin(), vertices_.end());

    for (const auto& f : hull.facets) {
        if (sgn(f.offset) <= 0) continue;
        if (std::any_of(f.normal.begin(), f.normal.end(), [](const Rational& x) { return sgn(x) < 0; })) continue;
        facets_.push_back({f.normal, f.offset});
    }
}

bool NewtonPolyhedron::is_convenient() const
{
    for (std::size_t i = 0; i < n_; ++i) {
        const bool hit = std::any_of(generators_.begin(), generators_.end(), [&](const ExponentVector& g) {
            for (std::size_t k = 0; k < n_; ++k)
                if (k != i && g[k] != 0) return false;
            return true;
        });
        if (!hit) return false;
    }
    return true;
}

std::optional<std::int64_t> NewtonPolyhedron::axis_intercept(std::size_t axis) const
{
    std::optional<std::int64_t> best;
    for (const auto& g : generators_)
        if (g.on_axis(axis) && (!best || g[axis] < *best)) best = g[axis];
    return best;
}

bool NewtonPolyhedron::contains(std::span<const Rational> x) const
{
    if (x.size() != n_) throw Error(ErrorCode::dimension_mismatch, "point has wrong length");
    for (const auto& c : x)
        if (sgn(c) < 0) return false;
    for (const auto& f : facets_) {
        Rational s = 0;
        for (std::size_t i = 0; i < n_; ++i) s += f.normal[i] * x[i];
        if (s < f.offset) return false;
    }
    return true;
}

std::string NewtonPolyhedron::to_json() const
{
    nlohmann::json doc;
    doc["dimension"] = n_;
    doc["vertices"] = nlohmann::json::array();
    for (const auto& v : vertices_) doc["vertices"].push_back(std::vector<std::int64_t>(v.entries().begin(), v.entries().end()));
    doc["facets"] = nlohmann::json::array();
    for (const auto& f : facets_) {
        std::vector<std::string> normal;
        for (const auto& c : f.normal) normal.push_back(to_string(c));
        doc["facets"].push_back({{"normal", normal}, {"offset", to_string(f.offset)}});
    }
    return doc.dump();
}

NewtonPolyhedron newton_polyhedron(const ExponentSet& points, std::size_t n)
{
    return NewtonPolyhedron(points, n);
}

NewtonPolyhedron newton_polyhedron(const Polynomial& h)
{
    if (h.is_zero()) throw Error(ErrorCode::zero_polynomial, "Newton polyhedron of the zero polynomial");
    return NewtonPolyhedron(h.support(), h.dimension());
}

std::optional<NewtonPolyhedron> restrict(const NewtonPolyhedron& polyhedron, std::span<const std::size_t> coords)
{
    const std::size_t n = polyhedron.dimension();
    if (coords.empty()) throw Error(ErrorCode::invalid_argument, "restriction to an empty coordinate set");
    std::vector<bool> inside(n, false);
    for (auto i : coords) {
        if (i >= n) throw Error(ErrorCode::invalid_argument, "restriction coordinate out of range");
        inside[i] = true;
    }
    ExponentSet projected;
    for (const auto& v : polyhedron.vertices()) {
        bool supported = true;
        for (std::size_t i = 0; i < n; ++i)
            if (!inside[i] && v[i] != 0) supported = false;
        if (!supported) continue;
        std::vector<std::int64_t> e;
        for (auto i : coords) e.push_back(v[i]);
        projected.emplace_back(std::move(e));
    }
    if (projected.empty()) return std::nullopt;
    return NewtonPolyhedron(std::move(projected), coords.size());
}

std::size_t Face::dimension() const
{
    std::vector<IntPoint> pts;
    for (const auto& v : vertices) pts.emplace_back(v.entries().begin(), v.entries().end());
    if (pts.empty()) return 0;
    return affine_dimension(pts, pts.front().size());
}

Face face_of_direction(const NewtonPolyhedron& polyhedron, std::span<const Rational> q)
{
    if (q.size() != polyhedron.dimension()) throw Error(ErrorCode::dimension_mismatch, "direction has wrong length");
    bool nonzero = false;
    bool positive = true;
    for (const auto& c : q) {
        if (sgn(c) < 0) throw Error(ErrorCode::invalid_argument, "face direction must be componentwise >= 0");
        if (sgn(c) > 0)
            nonzero = true;
        else
            positive = false;
    }
    if (!nonzero) throw Error(ErrorCode::invalid_argument, "face direction must be nonzero");

    Face face;
    face.direction.assign(q.begin(), q.end());
    face.compact = positive;
    bool first = true;
    for (const auto& v : polyhedron.vertices()) {
        Rational value = v.dot(q);
        if (first || value < face.value) face.value = value;
        first = false;
    }
    for (const auto& v : polyhedron.vertices())
        if (v.dot(q) == face.value) face.vertices.push_back(v);
    for (const auto& g : polyhedron.generators())
        if (g.dot(q) == face.value) face.points.push_back(g);
    return face;
}

ExponentSet minkowski_weighted_generators(std::span<const NewtonPolyhedron> summands,
                                         std::span<const std::int64_t> weights)
{
    if (summands.empty()) throw Error(ErrorCode::invalid_argument, "Minkowski sum of no polyhedra");
    if (weights.size() != summands.size()) throw Error(ErrorCode::invalid_argument, "one weight per summand required");
    const std::size_t n = summands.front().dimension();
    for (std::size_t i = 0; i < summands.size(); ++i) {
        if (summands[i].dimension() != n) throw Error(ErrorCode::dimension_mismatch, "summands differ in dimension");
        if (weights[i] < 1) throw Error(ErrorCode::invalid_argument, "Minkowski weights must be positive");
    }

    ExponentSet acc;
    for (const auto& v : summands[0].vertices()) acc.push_back(v.scaled(weights[0]));
    acc = minimal_points(std::move(acc));
    for (std::size_t i = 1; i < summands.size(); ++i) {
        ExponentSet next;
        next.reserve(acc.size() * summands[i].vertices().size());
        for (const auto& a : acc)
            for (const auto& v : summands[i].vertices()) next.push_back(a + v.scaled(weights[i]));
        acc = minimal_points(std::move(next));
    }
    return acc;
}

std::vector<std::vector<std::size_t>> minkowski_vertex_tuples(std::span<const NewtonPolyhedron> summands)
{
    if (summands.empty()) throw Error(ErrorCode::invalid_argument, "Minkowski sum of no polyhedra");
    const std::size_t n = summands.front().dimension();
    for (const auto& s : summands)
        if (s.dimension() != n) throw Error(ErrorCode::dimension_mismatch, "summands differ in dimension");

    // A strictly dominated partial sum stays dominated after adding more summands.
    std::map<ExponentVector, std::vector<std::size_t>> acc;
    for (std::size_t j = 0; j < summands[0].vertices().size(); ++j) acc.emplace(summands[0].vertices()[j], std::vector<std::size_t>{j});
    for (std::size_t i = 1; i < summands.size(); ++i) {
        std::map<ExponentVector, std::vector<std::size_t>> next;
        const auto& vertices = summands[i].vertices();
        for (const auto& [point, tuple] : acc) {
            for (std::size_t j = 0; j < vertices.size(); ++j) {
                auto [it, inserted] = next.try_emplace(point + vertices[j], tuple);
                if (inserted) it->second.push_back(j);
            }
        }
        ExponentSet keys;
        keys.reserve(next.size());
        for (const auto& [point, tuple] : next) keys.push_back(point);
        acc.clear();
        for (auto& m : minimal_points(std::move(keys))) acc.emplace(m, std::move(next.at(m)));
    }

    ExponentSet points;
    for (const auto& [point, tuple] : acc) points.push_back(point);
    const NewtonPolyhedron sum(std::move(points), n);
    std::vector<std::vector<std::size_t>> tuples;
    tuples.reserve(sum.vertices().size());
    for (const auto& v : sum.vertices()) tuples.push_back(acc.at(v));
    return tuples;
}

NewtonPolyhedron minkowski_weighted_sum(std::span<const NewtonPolyhedron> summands,
                                        std::span<const std::int64_t> weights)
{
    ExponentSet generators = minkowski_weighted_generators(summands, weights);
    return NewtonPolyhedron(std::move(generators), summands.front().dimension());
}

ExponentSet minkowski_face_vertices(std::span<const Face> faces)
{
    if (faces.empty()) return {};
    ExponentSet acc = faces.front().vertices;
    for (std::size_t i = 1; i < faces.size(); ++i) {
        ExponentSet next;
        for (const auto& a : acc)
            for (const auto& v : faces[i].vertices) next.push_back(a + v);
        canonicalize(next);
        acc = std::move(next);
    }
    if (acc.size() <= 1) return acc;
    std::vector<IntPoint> pts;
    for (const auto& a : acc) pts.emplace_back(a.entries().begin(), a.entries().end());
    const ConvexHull hull = convex_hull(pts, pts.front().size());
    ExponentSet out;
    for (auto idx : hull.vertices) out.push_back(acc[idx]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Face> decompose_face(const Face& sigma, std::span<const NewtonPolyhedron> summands)
{
    if (!sigma.compact) throw Error(ErrorCode::invalid_argument, "decompose_face requires a compact face");
    std::vector<Face> parts;
    parts.reserve(summands.size());
    for (const auto& g : summands) parts.push_back(face_of_direction(g, sigma.direction));
    if (minkowski_face_vertices(parts) != sigma.vertices)
        throw std::logic_error("face decomposition does not reproduce the face");
    return parts;
}

Polynomial face_function(const Polynomial& h, const Face& face)
{
    if (h.dimension() != face.direction.size())
        throw Error(ErrorCode::dimension_mismatch, "polynomial and face live in different dimensions");
    return h.terms_on_level(face.direction, face.value);
}

}  // namespace milnum
