#include "milnum/hull.hpp"

#include "checked_int.hpp"
#include "milnum/error.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <utility>

namespace milnum {
namespace {

using detail::CheckedInt;
using MpzPoint = std::vector<mpz_class>;

// Fraction-free elimination on an m x m row-major matrix, destroyed in place.
template <class Int>
Int bareiss_determinant(Int* a, std::size_t m)
{
    if (m == 0) return Int(1);
    if (m == 1) return a[0];
    if (m == 2) return a[0] * a[3] - a[1] * a[2];
    if (m == 3)
        return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
               a[2] * (a[3] * a[7] - a[4] * a[6]);
    Int previous(1);
    int sign_flip = 1;
    auto at = [&](std::size_t i, std::size_t j) -> Int& { return a[i * m + j]; };
    for (std::size_t k = 0; k < m; ++k) {
        if (sgn(at(k, k)) == 0) {
            std::size_t r = k + 1;
            while (r < m && sgn(at(r, k)) == 0) ++r;
            if (r == m) return Int(0);
            for (std::size_t j = 0; j < m; ++j) std::swap(at(k, j), at(r, j));
            sign_flip = -sign_flip;
        }
        for (std::size_t i = k + 1; i < m; ++i) {
            for (std::size_t j = k + 1; j < m; ++j) {
                Int t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                at(i, j) = t / previous;
            }
        }
        previous = at(k, k);
    }
    Int det = at(m - 1, m - 1);
    return sign_flip < 0 ? Int(-det) : det;
}

struct KernelFacet {
    std::vector<int> vertices;
    MpzPoint normal;
    mpz_class offset;
};

struct KernelResult {
    std::vector<KernelFacet> facets;
    std::vector<std::vector<int>> simplices;
    mpz_class determinant_sum;
};

// Placing triangulation: every inserted point is coned to the boundary facets
// it sees; only the determinant sum of the cones is kept. Boundary facets are
// kept simplicial; coplanar facets are merged later. Pending points keep a
// conflict list of the facets they see.
template <class Int>
class PlacingKernel {
public:
    PlacingKernel(const std::vector<MpzPoint>& points, std::size_t d) : d_(d), count_(points.size())
    {
        coords_.reserve(count_ * d_);
        for (const auto& p : points)
            for (const auto& c : p) {
                coords_.push_back(detail::from_mpz<Int>(c));
                coord_bits_ = std::max(coord_bits_, static_cast<int>(mpz_sizeinbase(c.get_mpz_t(), 2)));
            }
    }

    KernelResult run(const std::vector<int>& initial, bool with_facets)
    {
        with_simplices_ = with_facets;
        interior_.assign(d_, Int(0));
        for (int v : initial)
            for (std::size_t k = 0; k < d_; ++k) interior_[k] += point(v)[k];

        std::vector<char> used(count_, 0);
        for (int v : initial) used[v] = 1;
        point_conflicts_.assign(count_, {});
        stamp_.assign(count_, -1);
        done_.assign(count_, 0);

        // A fixed-seed shuffle keeps the triangulation small without losing determinism.
        std::vector<int> order;
        order.reserve(count_);
        for (std::size_t k = 0; k < count_; ++k)
            if (!used[k]) order.push_back(static_cast<int>(k));
        std::shuffle(order.begin(), order.end(), std::mt19937_64(0x5eed));

        std::vector<int> verts(d_);
        for (std::size_t skip = 0; skip <= d_; ++skip) {
            verts.clear();
            for (std::size_t i = 0; i <= d_; ++i)
                if (i != skip) verts.push_back(initial[i]);
            std::sort(verts.begin(), verts.end());
            const int id = add_facet(verts);
            if (skip == 0) determinant_sum_ += facets_[id].scale * (dot(normal(id), point(initial[0])) - facets_[id].offset);
            for (int k : order) record_conflict(id, k);
        }
        if (with_simplices_) {
            simplices_.emplace_back(initial.begin(), initial.end());
            std::sort(simplices_.back().begin(), simplices_.back().end());
        }

        for (int k : order) insert(k);

        KernelResult result;
        result.determinant_sum = detail::to_mpz(determinant_sum_);
        if (!with_facets) return result;
        result.simplices = std::move(simplices_);
        for (std::size_t id = 0; id < facets_.size(); ++id) {
            if (!facets_[id].alive) continue;
            KernelFacet out;
            const int* v = vertices(static_cast<int>(id));
            out.vertices.assign(v, v + d_);
            const Int* nrm = normal(static_cast<int>(id));
            for (std::size_t k = 0; k < d_; ++k) out.normal.push_back(detail::to_mpz(nrm[k]));
            out.offset = detail::to_mpz(facets_[id].offset);
            result.facets.push_back(std::move(out));
        }
        return result;
    }

private:
    struct Facet {
        Int offset;
        Int scale;
        bool alive = true;
        bool fast = false;  // side tests cannot overflow plain 128-bit arithmetic
        std::vector<int> conflicts;  // pending points strictly beyond this facet
    };

    const Int* point(int k) const { return coords_.data() + static_cast<std::size_t>(k) * d_; }
    const Int* normal(int id) const { return normals_.data() + static_cast<std::size_t>(id) * d_; }
    const int* vertices(int id) const { return vertex_pool_.data() + static_cast<std::size_t>(id) * d_; }

    Int dot(const Int* a, const Int* b) const
    {
        Int s(0);
        for (std::size_t k = 0; k < d_; ++k) s += a[k] * b[k];
        return s;
    }

    bool beyond(int facet, int k) const
    {
        const Facet& f = facets_[facet];
        if constexpr (std::is_same_v<Int, CheckedInt>) {
            if (f.fast) {
                const Int* a = normal(facet);
                const Int* b = point(k);
                __int128 s = 0;
                for (std::size_t i = 0; i < d_; ++i) s += a[i].value() * b[i].value();
                return s < f.offset.value();
            }
        }
        return dot(normal(facet), point(k)) < f.offset;
    }

    void record_conflict(int facet, int k)
    {
        if (beyond(facet, k)) {
            facets_[facet].conflicts.push_back(k);
            point_conflicts_[k].push_back(facet);
        }
    }

    // Ridge of facet `id` without its vertex number `skip`, packed as a map key.
    const std::string& ridge_key(int id, std::size_t skip)
    {
        key_.clear();
        const int* v = vertices(id);
        for (std::size_t i = 0; i < d_; ++i)
            if (i != skip) key_.append(reinterpret_cast<const char*>(v + i), sizeof(int));
        return key_;
    }

    int add_facet(const std::vector<int>& verts)
    {
        const int id = static_cast<int>(facets_.size());
        const Int* base = point(verts[0]);
        const std::size_t m = d_ - 1;
        rows_.resize(m * d_);
        for (std::size_t i = 1; i < verts.size(); ++i)
            for (std::size_t k = 0; k < d_; ++k) rows_[(i - 1) * d_ + k] = point(verts[i])[k] - base[k];
        normal_.assign(d_, Int(0));
        minor_.resize(m * m);
        for (std::size_t col = 0; col < d_; ++col) {
            for (std::size_t i = 0; i < m; ++i) {
                std::size_t j = 0;
                for (std::size_t k = 0; k < d_; ++k)
                    if (k != col) minor_[i * m + j++] = rows_[i * d_ + k];
            }
            Int det = bareiss_determinant(minor_.data(), m);
            normal_[col] = (col % 2 == 0) ? det : Int(-det);
        }
        Facet f;
        f.offset = dot(normal_.data(), base);
        // Orient inward: the initial simplex barycentre (scaled by d+1) is strictly inside.
        Int side = dot(normal_.data(), interior_.data()) - Int(static_cast<std::int64_t>(d_ + 1)) * f.offset;
        if (sgn(side) < 0) {
            for (auto& c : normal_) c = -c;
            f.offset = -f.offset;
        }
        Int g(0);
        for (const auto& c : normal_) g = gcd(g, c);
        f.scale = g;
        for (auto& c : normal_) c /= g;
        f.offset /= g;
        if constexpr (std::is_same_v<Int, CheckedInt>) {
            int normal_bits = 0;
            for (const auto& c : normal_) normal_bits = std::max(normal_bits, bit_length(c.value()));
            f.fast = coord_bits_ + normal_bits + bit_length(static_cast<__int128>(d_)) < 126;
        }

        normals_.insert(normals_.end(), normal_.begin(), normal_.end());
        vertex_pool_.insert(vertex_pool_.end(), verts.begin(), verts.end());
        facets_.push_back(std::move(f));
        for (std::size_t skip = 0; skip < d_; ++skip) {
            auto& slot = ridges_.try_emplace(ridge_key(id, skip), std::array<int, 2>{-1, -1}).first->second;
            if (slot[0] < 0)
                slot[0] = id;
            else
                slot[1] = id;
        }
        return id;
    }

    void insert(int k)
    {
        visible_.clear();
        for (int id : point_conflicts_[k])
            if (facets_[id].alive) visible_.push_back(id);
        std::vector<int>().swap(point_conflicts_[k]);
        done_[k] = 1;
        if (visible_.empty()) return;

        for (int id : visible_) facets_[id].alive = false;

        horizon_.clear();
        for (int id : visible_) {
            const Facet& f = facets_[id];
            determinant_sum_ += f.scale * (f.offset - dot(normal(id), point(k)));
            if (with_simplices_) {
                const int* v = vertices(id);
                simplices_.emplace_back(v, v + d_);
                simplices_.back().push_back(k);
                std::sort(simplices_.back().begin(), simplices_.back().end());
            }
            for (std::size_t skip = 0; skip < d_; ++skip) {
                const auto& slot = ridges_.at(ridge_key(id, skip));
                const int other = slot[0] == id ? slot[1] : slot[0];
                if (other >= 0 && facets_[other].alive) horizon_.push_back({id, skip, other});
            }
        }

        for (int id : visible_) {
            for (std::size_t skip = 0; skip < d_; ++skip) {
                auto it = ridges_.find(ridge_key(id, skip));
                auto& slot = it->second;
                if (slot[0] == id) slot[0] = -1;
                if (slot[1] == id) slot[1] = -1;
                if (slot[0] < 0 && slot[1] < 0) {
                    ridges_.erase(it);
                } else if (slot[0] < 0) {
                    std::swap(slot[0], slot[1]);
                }
            }
        }

        // A point beyond a new facet was beyond one of the two facets on its horizon ridge.
        std::vector<int> verts;
        verts.reserve(d_);
        for (const auto& h : horizon_) {
            verts.clear();
            const int* v = vertices(h.inside);
            for (std::size_t i = 0; i < d_; ++i)
                if (i != h.skip) verts.push_back(v[i]);
            verts.push_back(k);
            std::sort(verts.begin(), verts.end());
            const int id = add_facet(verts);
            for (int source : {h.inside, h.outside}) {
                for (int q : facets_[source].conflicts) {
                    if (done_[q] || stamp_[q] == id) continue;
                    stamp_[q] = id;
                    record_conflict(id, q);
                }
            }
        }

        for (int id : visible_) std::vector<int>().swap(facets_[id].conflicts);
    }

    struct HorizonEntry {
        int inside;  // visible facet on the ridge
        std::size_t skip;
        int outside;  // surviving facet on the ridge
    };

    static int bit_length(__int128 v)
    {
        unsigned __int128 a = v < 0 ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
        int bits = 0;
        while (a) {
            a >>= 1;
            ++bits;
        }
        return bits;
    }

    std::size_t d_;
    std::size_t count_;
    int coord_bits_ = 0;
    std::vector<Int> coords_;
    std::vector<Int> interior_;
    std::vector<Facet> facets_;
    std::vector<Int> normals_;
    std::vector<int> vertex_pool_;
    std::vector<std::vector<int>> point_conflicts_;
    std::vector<int> stamp_;
    std::vector<char> done_;
    std::vector<int> visible_;
    std::vector<HorizonEntry> horizon_;
    std::string key_;
    std::vector<Int> rows_;
    std::vector<Int> minor_;
    std::vector<Int> normal_;
    std::unordered_map<std::string, std::array<int, 2>> ridges_;
    bool with_simplices_ = false;
    std::vector<std::vector<int>> simplices_;
    Int determinant_sum_{0};
};

KernelResult run_kernel(const std::vector<MpzPoint>& points, std::size_t d, const std::vector<int>& initial,
                        bool with_facets)
{
    try {
        return PlacingKernel<CheckedInt>(points, d).run(initial, with_facets);
    } catch (const detail::IntOverflow&) {
        return PlacingKernel<mpz_class>(points, d).run(initial, with_facets);
    }
}

struct RankInfo {
    std::vector<int> independent;  // point indices; first is the base point
    std::vector<std::size_t> pivot_columns;
};

RankInfo affine_rank(const std::vector<MpzPoint>& points, std::size_t d)
{
    RankInfo info;
    if (points.empty()) return info;
    info.independent.push_back(0);
    std::vector<RationalVector> rows;
    for (std::size_t i = 1; i < points.size() && rows.size() < d; ++i) {
        RationalVector v(d);
        for (std::size_t k = 0; k < d; ++k) v[k] = Rational(points[i][k] - points[0][k]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const std::size_t c = info.pivot_columns[r];
            if (sgn(v[c]) == 0) continue;
            Rational factor = v[c] / rows[r][c];
            for (std::size_t k = 0; k < d; ++k) v[k] -= factor * rows[r][k];
        }
        auto nz = std::find_if(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; });
        if (nz == v.end()) continue;
        info.pivot_columns.push_back(static_cast<std::size_t>(nz - v.begin()));
        rows.push_back(std::move(v));
        info.independent.push_back(static_cast<int>(i));
    }
    return info;
}

std::size_t rank_of(std::vector<RationalVector> rows, std::size_t d)
{
    std::size_t rank = 0;
    for (std::size_t col = 0; col < d && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (sgn(rows[i][col]) == 0) continue;
            Rational factor = rows[i][col] / rows[rank][col];
            for (std::size_t k = col; k < d; ++k) rows[i][k] -= factor * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

// Hull of distinct integer points. Indices in the result refer to `points`.
ConvexHull hull_of_distinct(const std::vector<MpzPoint>& points, std::size_t d, bool volume_only)
{
    ConvexHull hull;
    hull.dimension = d;

    const RankInfo rank = affine_rank(points, d);
    hull.affine_dimension = rank.pivot_columns.size();

    if (hull.affine_dimension == 0) {
        hull.vertices = {0};
        return hull;
    }

    if (hull.affine_dimension < d) {
        std::vector<std::size_t> cols = rank.pivot_columns;
        std::sort(cols.begin(), cols.end());
        std::vector<MpzPoint> projected;
        projected.reserve(points.size());
        for (const auto& p : points) {
            MpzPoint q;
            for (std::size_t c : cols) q.push_back(p[c]);
            projected.push_back(std::move(q));
        }
        ConvexHull sub = hull_of_distinct(projected, cols.size(), volume_only);
        hull.vertices = std::move(sub.vertices);
        return hull;
    }

    if (d == 1) {
        auto [lo, hi] = std::minmax_element(points.begin(), points.end(),
                                            [](const MpzPoint& a, const MpzPoint& b) { return a[0] < b[0]; });
        const auto ilo = static_cast<std::size_t>(lo - points.begin());
        const auto ihi = static_cast<std::size_t>(hi - points.begin());
        hull.vertices = {std::min(ilo, ihi), std::max(ilo, ihi)};
        hull.facets = {Halfspace{{Rational(1)}, Rational((*lo)[0])}, Halfspace{{Rational(-1)}, Rational(-(*hi)[0])}};
        hull.facet_points = {{ilo}, {ihi}};
        hull.simplices = {hull.vertices};
        hull.volume = Rational((*hi)[0] - (*lo)[0]);
        return hull;
    }

    KernelResult kernel = run_kernel(points, d, rank.independent, !volume_only);

    hull.volume = Rational(kernel.determinant_sum) / Rational(factorial(static_cast<unsigned>(d)));
    if (volume_only) return hull;
    for (auto& s : kernel.simplices) hull.simplices.emplace_back(s.begin(), s.end());
    std::sort(hull.simplices.begin(), hull.simplices.end());

    std::map<std::pair<MpzPoint, mpz_class>, std::vector<std::size_t>> merged;
    for (const auto& f : kernel.facets) {
        auto& members = merged[{f.normal, f.offset}];
        members.insert(members.end(), f.vertices.begin(), f.vertices.end());
    }
    std::vector<std::vector<std::size_t>> incident(points.size());
    for (const auto& [key, members_raw] : merged) {
        std::vector<std::size_t> members = members_raw;
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        const std::size_t facet_id = hull.facets.size();
        Halfspace h;
        for (const auto& c : key.first) h.normal.emplace_back(c);
        h.offset = Rational(key.second);
        hull.facets.push_back(std::move(h));
        for (std::size_t m : members) incident[m].push_back(facet_id);
        hull.facet_points.push_back(std::move(members));
    }

    for (std::size_t i = 0; i < points.size(); ++i) {
        if (incident[i].size() < d) continue;
        std::vector<RationalVector> normals;
        normals.reserve(incident[i].size());
        for (std::size_t f : incident[i]) normals.push_back(hull.facets[f].normal);
        if (rank_of(std::move(normals), d) == d) hull.vertices.push_back(i);
    }
    return hull;
}

std::vector<MpzPoint> to_mpz_points(std::span<const IntPoint> points)
{
    std::vector<MpzPoint> input;
    input.reserve(points.size());
    for (const auto& p : points) {
        MpzPoint q;
        q.reserve(p.size());
        for (auto c : p) q.emplace_back(static_cast<long>(c));
        input.push_back(std::move(q));
    }
    return input;
}

ConvexHull hull_with_dedup(const std::vector<MpzPoint>& input, std::size_t d, bool volume_only = false)
{
    if (input.empty()) throw Error(ErrorCode::invalid_argument, "convex hull of an empty point set");
    for (const auto& p : input)
        if (p.size() != d) throw Error(ErrorCode::dimension_mismatch, "point dimension differs from hull dimension");

    std::vector<std::size_t> order(input.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return input[a] < input[b]; });

    std::vector<MpzPoint> distinct;
    std::vector<std::size_t> original;
    for (std::size_t idx : order) {
        if (!distinct.empty() && distinct.back() == input[idx]) continue;
        distinct.push_back(input[idx]);
        original.push_back(idx);
    }

    ConvexHull hull = hull_of_distinct(distinct, d, volume_only);
    auto remap = [&](std::vector<std::size_t>& v) {
        for (auto& i : v) i = original[i];
    };
    remap(hull.vertices);
    std::sort(hull.vertices.begin(), hull.vertices.end());
    for (auto& simplex : hull.simplices) {
        remap(simplex);
        std::sort(simplex.begin(), simplex.end());
    }
    for (auto& fp : hull.facet_points) {
        remap(fp);
        std::sort(fp.begin(), fp.end());
    }
    return hull;
}

}  // namespace

ConvexHull convex_hull(std::span<const IntPoint> points, std::size_t dimension)
{
    return hull_with_dedup(to_mpz_points(points), dimension);
}

Rational convex_hull_volume(std::span<const IntPoint> points, std::size_t dimension)
{
    return hull_with_dedup(to_mpz_points(points), dimension, true).volume;
}

ConvexHull convex_hull(std::span<const RationalVector> points, std::size_t dimension)
{
    mpz_class denominator = 1;
    for (const auto& p : points)
        for (const auto& c : p) denominator = lcm(denominator, mpz_class(c.get_den()));

    std::vector<MpzPoint> input;
    input.reserve(points.size());
    for (const auto& p : points) {
        MpzPoint q;
        q.reserve(p.size());
        for (const auto& c : p) q.push_back(mpz_class(c.get_num() * (denominator / c.get_den())));
        input.push_back(std::move(q));
    }

    ConvexHull hull = hull_with_dedup(input, dimension);
    if (denominator != 1) {
        const Rational scale(denominator);
        for (auto& f : hull.facets) f.offset /= scale;
        Rational factor = 1;
        for (std::size_t k = 0; k < dimension; ++k) factor *= scale;
        hull.volume /= factor;
    }
    return hull;
}

std::size_t affine_dimension(std::span<const IntPoint> points, std::size_t dimension)
{
    std::vector<MpzPoint> input;
    for (const auto& p : points) {
        MpzPoint q;
        for (auto c : p) q.emplace_back(static_cast<long>(c));
        input.push_back(std::move(q));
    }
    return affine_rank(input, dimension).pivot_columns.size();
}

Rational polytope_volume(const RationalPolytope& polytope)
{
    if (polytope.vertices.empty()) return Rational(0);
    return convex_hull(polytope.vertices, polytope.dimension).volume;
}

}  // namespace milnum
