#include "milnum/covolume.hpp"

#include "milnum/error.hpp"
#include "milnum/hull.hpp"

#include <algorithm>

namespace milnum {
namespace {

void require_convenient(const NewtonPolyhedron& polyhedron)
{
    if (!polyhedron.is_convenient())
        throw Error(ErrorCode::non_convenient, "covolume is infinite for a non-convenient polyhedron");
}

Rational box_volume(std::int64_t box, std::size_t n)
{
    Rational v = 1;
    for (std::size_t i = 0; i < n; ++i) v *= Rational(static_cast<long>(box));
    return v;
}

}  // namespace

Rational covolume(const NewtonPolyhedron& polyhedron)
{
    require_convenient(polyhedron);
    return box_volume(polyhedron.truncation_box(), polyhedron.dimension()) - polyhedron.truncation_volume();
}

Rational covolume_of_generators(const ExponentSet& generators, std::size_t n)
{
    std::vector<bool> axis(n, false);
    std::int64_t top = 0;
    for (const auto& g : generators) {
        if (g.size() != n) throw Error(ErrorCode::dimension_mismatch, "generator " + g.to_string() + " has wrong length");
        for (std::size_t i = 0; i < n; ++i)
            if (g.on_axis(i)) axis[i] = true;
        for (auto c : g.entries()) top = std::max(top, c);
    }
    if (std::find(axis.begin(), axis.end(), false) != axis.end())
        throw Error(ErrorCode::non_convenient, "covolume is infinite for a non-convenient polyhedron");
    const std::int64_t box = top + 1;
    const auto corners = box_truncation_points(generators, n, box);
    return box_volume(box, n) - convex_hull_volume(corners, n);
}

Rational covolume_with_box(const NewtonPolyhedron& polyhedron, std::int64_t box)
{
    require_convenient(polyhedron);
    const std::size_t n = polyhedron.dimension();
    for (const auto& v : polyhedron.vertices())
        for (auto c : v.entries())
            if (c > box) throw Error(ErrorCode::invalid_argument, "box size below a vertex coordinate");
    const auto corners = box_truncation_points(polyhedron.vertices(), n, box);
    return box_volume(box, n) - convex_hull(corners, n).volume;
}

}  // namespace milnum
