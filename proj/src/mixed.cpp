#include "milnum/mixed.hpp"

#include "milnum/covolume.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

namespace milnum {
namespace {

void collect_compositions(int remaining, std::size_t slot, Composition& current, std::vector<Composition>& out)
{
    if (slot + 1 == current.size()) {
        current[slot] = remaining;
        out.push_back(current);
        return;
    }
    for (int k = 0; k <= remaining; ++k) {
        current[slot] = k;
        collect_compositions(remaining - k, slot + 1, current, out);
    }
}

Rational power(std::int64_t base, int exponent)
{
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), mpz_class(static_cast<long>(base)).get_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(out);
}

Rational multinomial(const Composition& k)
{
    int total = 0;
    for (int x : k) total += x;
    Integer m = factorial(static_cast<unsigned>(total));
    for (int x : k) m /= factorial(static_cast<unsigned>(x));
    return Rational(m);
}

// Incremental row-echelon basis used to pick a nonsingular sample set.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t width) : width_(width) {}

    std::size_t rank() const { return rows_.size(); }

    bool try_add(RationalVector v)
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t c = pivots_[r];
            if (sgn(v[c]) == 0) continue;
            Rational f = v[c] / rows_[r][c];
            for (std::size_t k = 0; k < width_; ++k) v[k] -= f * rows_[r][k];
        }
        auto nz = std::find_if(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; });
        if (nz == v.end()) return false;
        pivots_.push_back(static_cast<std::size_t>(nz - v.begin()));
        rows_.push_back(std::move(v));
        return true;
    }

private:
    std::size_t width_;
    std::vector<RationalVector> rows_;
    std::vector<std::size_t> pivots_;
};

RationalVector solve_square(std::vector<RationalVector> a, RationalVector b)
{
    const std::size_t m = a.size();
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pivot = col;
        while (pivot < m && sgn(a[pivot][col]) == 0) ++pivot;
        if (pivot == m) throw Error(ErrorCode::singular_system, "covolume interpolation system is singular");
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == col || sgn(a[i][col]) == 0) continue;
            Rational f = a[i][col] / a[col][col];
            for (std::size_t k = col; k < m; ++k) a[i][k] -= f * a[col][k];
            b[i] -= f * b[col];
        }
    }
    for (std::size_t i = 0; i < m; ++i) b[i] /= a[i][i];
    return b;
}

// Monomial values prod lambda_i^{k_i} of a dehomogenized sample (lambda_p = 1).
RationalVector monomial_row(const std::vector<Composition>& comps, const std::vector<std::int64_t>& lambda)
{
    RationalVector row;
    row.reserve(comps.size());
    for (const auto& k : comps) {
        Rational v = 1;
        for (std::size_t i = 0; i < k.size(); ++i)
            if (k[i] != 0) v *= power(lambda[i], k[i]);
        row.push_back(std::move(v));
    }
    return row;
}

void require_same_dimension(std::span<const NewtonPolyhedron> polyhedra)
{
    if (polyhedra.empty()) throw Error(ErrorCode::invalid_argument, "at least one polyhedron is required");
    for (const auto& g : polyhedra)
        if (g.dimension() != polyhedra.front().dimension())
            throw Error(ErrorCode::dimension_mismatch, "polyhedra differ in dimension");
}

void require_convenient(std::span<const NewtonPolyhedron> polyhedra)
{
    for (std::size_t i = 0; i < polyhedra.size(); ++i)
        if (!polyhedra[i].is_convenient())
            throw Error(ErrorCode::non_convenient, "polyhedron " + std::to_string(i + 1) + " is not convenient");
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t j)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> current;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (current.size() == j) {
            out.push_back(current);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            current.push_back(i);
            self(self, i + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

Rational signed_unit(std::size_t exponent) { return Rational(exponent % 2 == 0 ? 1 : -1); }

}  // namespace

std::vector<Composition> compositions(int d, std::size_t p)
{
    if (p == 0) throw Error(ErrorCode::invalid_argument, "compositions into zero parts");
    std::vector<Composition> out;
    Composition current(p, 0);
    collect_compositions(d, 0, current, out);
    return out;
}

MixedCovolumeTable::MixedCovolumeTable(std::size_t dimension, std::size_t count, std::map<Composition, Rational> entries)
    : dimension_(dimension), count_(count), entries_(std::move(entries))
{
}

const Rational& MixedCovolumeTable::at(const Composition& k) const
{
    auto it = entries_.find(k);
    if (it == entries_.end()) throw Error(ErrorCode::invalid_argument, "composition not in mixed covolume table");
    return it->second;
}

Rational MixedCovolumeTable::covolume_polynomial(std::span<const std::int64_t> lambda) const
{
    if (lambda.size() != count_) throw Error(ErrorCode::invalid_argument, "one lambda per polyhedron required");
    Rational total = 0;
    for (const auto& [k, value] : entries_) {
        Rational term = multinomial(k) * value;
        for (std::size_t i = 0; i < k.size(); ++i)
            if (k[i] != 0) term *= power(lambda[i], k[i]);
        total += term;
    }
    return total;
}

Rational MixedCovolumeTable::interior_sum() const
{
    Rational total = 0;
    for (const auto& [k, value] : entries_)
        if (std::all_of(k.begin(), k.end(), [](int x) { return x >= 1; })) total += value;
    return total;
}

Rational weighted_sum_covolume(std::span<const NewtonPolyhedron> polyhedra, std::span<const std::int64_t> lambda)
{
    if (polyhedra.empty()) throw Error(ErrorCode::invalid_argument, "Minkowski sum of no polyhedra");
    return covolume_of_generators(minkowski_weighted_generators(polyhedra, lambda), polyhedra.front().dimension());
}

MixedCovolumeTable mixed_covolumes(std::span<const NewtonPolyhedron> polyhedra, const MixedOptions& options)
{
    require_same_dimension(polyhedra);
    require_convenient(polyhedra);
    const std::size_t p = polyhedra.size();
    const int d = static_cast<int>(polyhedra.front().dimension());
    const auto comps = compositions(d, p);

    if (p == 1) return MixedCovolumeTable(d, 1, {{comps.front(), covolume(polyhedra.front())}});

    // Dehomogenize at lambda_p = 1 and pick grid points from {1..d+1}^{p-1}
    // (smallest coordinate sums first) until the monomial system is square and nonsingular.
    std::vector<std::vector<std::int64_t>> grid;
    {
        std::vector<std::int64_t> point(p - 1, 1);
        for (;;) {
            grid.push_back(point);
            std::size_t i = 0;
            while (i < p - 1 && point[i] == d + 1) point[i++] = 1;
            if (i == p - 1) break;
            ++point[i];
        }
        std::stable_sort(grid.begin(), grid.end(), [](const auto& a, const auto& b) {
            std::int64_t sa = 0, sb = 0;
            for (auto x : a) sa += x;
            for (auto x : b) sb += x;
            return sa < sb;
        });
    }

    std::vector<std::vector<std::int64_t>> samples;
    std::vector<RationalVector> system;
    EchelonBasis basis(comps.size());
    for (const auto& g : grid) {
        std::vector<std::int64_t> lambda(g);
        lambda.push_back(1);
        RationalVector row = monomial_row(comps, lambda);
        if (!basis.try_add(row)) continue;
        samples.push_back(std::move(lambda));
        system.push_back(std::move(row));
        if (samples.size() == comps.size()) break;
    }
    if (samples.size() != comps.size())
        throw Error(ErrorCode::singular_system, "no nonsingular interpolation sample set on the grid");

    std::vector<std::vector<std::int64_t>> held_out;
    {
        std::mt19937_64 rng(options.seed);
        std::uniform_int_distribution<std::int64_t> pick(1, 2 * d + 2);
        std::uniform_int_distribution<std::int64_t> pick_last(2, 2 * d + 2);
        std::set<std::vector<std::int64_t>> seen;
        while (held_out.size() < options.held_out) {
            std::vector<std::int64_t> lambda(p);
            for (std::size_t i = 0; i + 1 < p; ++i) lambda[i] = pick(rng);
            lambda[p - 1] = pick_last(rng);
            if (seen.insert(lambda).second) held_out.push_back(std::move(lambda));
        }
    }

    std::vector<std::vector<std::int64_t>> jobs = samples;
    jobs.insert(jobs.end(), held_out.begin(), held_out.end());
    const auto tuples = minkowski_vertex_tuples(polyhedra);
    std::vector<Rational> values(jobs.size());
    detail::for_each_index(jobs.size(), options.execution, [&](std::size_t i) {
        ExponentSet generators;
        generators.reserve(tuples.size());
        for (const auto& t : tuples) {
            ExponentVector v(static_cast<std::size_t>(d));
            for (std::size_t k = 0; k < p; ++k) v = v + polyhedra[k].vertices()[t[k]].scaled(jobs[i][k]);
            generators.push_back(std::move(v));
        }
        values[i] = covolume_of_generators(generators, static_cast<std::size_t>(d));
    });

    RationalVector rhs(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(samples.size()));
    RationalVector coefficients = solve_square(std::move(system), std::move(rhs));

    std::map<Composition, Rational> entries;
    for (std::size_t c = 0; c < comps.size(); ++c) entries.emplace(comps[c], coefficients[c] / multinomial(comps[c]));
    MixedCovolumeTable table(d, p, std::move(entries));

    for (std::size_t h = 0; h < held_out.size(); ++h) {
        if (table.covolume_polynomial(held_out[h]) != values[samples.size() + h])
            throw Error(ErrorCode::interpolation_mismatch,
                        "interpolated covolume polynomial disagrees with a held-out evaluation");
    }
    return table;
}

NewtonNumberReport newton_number(std::span<const NewtonPolyhedron> polyhedra, std::size_t n,
                                 const MixedOptions& options)
{
    require_same_dimension(polyhedra);
    const std::size_t p = polyhedra.size();
    if (polyhedra.front().dimension() != n)
        throw Error(ErrorCode::dimension_mismatch, "polyhedra do not live in dimension n");
    if (p > n) throw Error(ErrorCode::too_many_components, "p exceeds n");
    require_convenient(polyhedra);

    NewtonNumberReport report;
    report.n = n;
    report.p = p;
    for (const auto& g : polyhedra) report.convenient.push_back(g.is_convenient());

    for (std::size_t j = p; j <= n; ++j)
        for (auto& subset : subsets_of_size(n, j)) {
            SubsetContribution c;
            c.subset = std::move(subset);
            report.per_subset.push_back(std::move(c));
        }

    // Subsets run concurrently; nested sample loops then run serially inside each.
    MixedOptions inner = options;
    if (options.execution == Execution::parallel && report.per_subset.size() > 1) inner.execution = Execution::serial;

    detail::for_each_index(report.per_subset.size(), options.execution, [&](std::size_t s) {
        auto& entry = report.per_subset[s];
        std::vector<NewtonPolyhedron> restricted;
        restricted.reserve(p);
        for (const auto& g : polyhedra) {
            auto r = restrict(g, entry.subset);
            if (!r) throw std::logic_error("convenient polyhedron has an empty coordinate restriction");
            restricted.push_back(std::move(*r));
        }
        const std::size_t j = entry.subset.size();
        entry.table = mixed_covolumes(restricted, inner);
        entry.contribution = signed_unit(n - j) * Rational(factorial(static_cast<unsigned>(j))) * entry.table.interior_sum();
        for (auto& i : entry.subset) ++i;
    });

    report.constant_term = signed_unit(n - p + 1);
    report.nu = report.constant_term;
    for (const auto& c : report.per_subset) report.nu += c.contribution;
    return report;
}

NewtonNumberReport kouchnirenko_report(const NewtonPolyhedron& polyhedron)
{
    if (!polyhedron.is_convenient())
        throw Error(ErrorCode::non_convenient, "Kouchnirenko number needs a convenient polyhedron");
    const std::size_t n = polyhedron.dimension();
    NewtonNumberReport report;
    report.n = n;
    report.p = 1;
    report.convenient = {true};
    report.constant_term = signed_unit(n);  // i = 0: vol_0 = 1
    report.nu = report.constant_term;
    for (std::size_t i = 1; i <= n; ++i) {
        for (const auto& subset : subsets_of_size(n, i)) {
            const Rational covol = covolume(*restrict(polyhedron, subset));
            SubsetContribution c;
            c.contribution = signed_unit(n - i) * Rational(factorial(static_cast<unsigned>(i))) * covol;
            c.table = MixedCovolumeTable(i, 1, {{Composition{static_cast<int>(i)}, covol}});
            for (auto k : subset) c.subset.push_back(k + 1);
            report.nu += c.contribution;
            report.per_subset.push_back(std::move(c));
        }
    }
    return report;
}

Rational kouchnirenko_number(const NewtonPolyhedron& polyhedron) { return kouchnirenko_report(polyhedron).nu; }

std::vector<NewtonPolyhedron> extend_to_convenient(std::span<const NewtonPolyhedron> polyhedra, std::int64_t extension)
{
    if (extension < 1) throw Error(ErrorCode::invalid_argument, "extension exponent must be positive");
    std::vector<NewtonPolyhedron> out;
    out.reserve(polyhedra.size());
    for (const auto& g : polyhedra) {
        const std::size_t n = g.dimension();
        ExponentSet generators = g.generators();
        bool changed = false;
        for (std::size_t j = 0; j < n; ++j) {
            const bool has_axis = std::any_of(generators.begin(), generators.end(), [&](const ExponentVector& v) {
                for (std::size_t k = 0; k < n; ++k)
                    if (k != j && v[k] != 0) return false;
                return true;
            });
            if (has_axis) continue;
            ExponentVector axis(n);
            axis.set(j, extension);
            generators.push_back(std::move(axis));
            changed = true;
        }
        out.push_back(changed ? NewtonPolyhedron(std::move(generators), n) : g);
    }
    return out;
}

std::vector<NewtonPolyhedron> newton_polyhedra(const AnalyticMapGerm& germ)
{
    std::vector<NewtonPolyhedron> out;
    out.reserve(germ.component_count());
    for (const auto& c : germ.components()) out.push_back(newton_polyhedron(c));
    return out;
}

std::vector<NewtonPolyhedron> extend_to_convenient(const AnalyticMapGerm& germ, std::int64_t extension)
{
    const auto polyhedra = newton_polyhedra(germ);
    return extend_to_convenient(polyhedra, extension);
}

std::int64_t default_initial_extension(std::span<const NewtonPolyhedron> polyhedra)
{
    require_same_dimension(polyhedra);
    std::int64_t top = 0;
    for (const auto& g : polyhedra)
        for (const auto& v : g.generators())
            for (auto c : v.entries()) top = std::max(top, c);
    return static_cast<std::int64_t>(polyhedra.front().dimension()) * (1 + top);
}

NewtonNumberReport newton_number_nonconvenient(std::span<const NewtonPolyhedron> polyhedra, std::size_t n,
                                               const StabilizationPolicy& policy, const MixedOptions& options)
{
    require_same_dimension(polyhedra);
    if (polyhedra.size() > n) throw Error(ErrorCode::too_many_components, "p exceeds n");
    if (policy.max_doublings < 1) throw Error(ErrorCode::invalid_argument, "max_doublings must be at least 1");
    const std::int64_t start = policy.initial_extension.value_or(default_initial_extension(polyhedra));
    if (start < 1) throw Error(ErrorCode::invalid_argument, "initial extension must be positive");

    std::vector<bool> flags;
    for (const auto& g : polyhedra) flags.push_back(g.is_convenient());

    if (std::all_of(flags.begin(), flags.end(), [](bool b) { return b; })) {
        NewtonNumberReport report = newton_number(polyhedra, n, options);
        report.stabilization_trace = {{start, report.nu}};
        return report;
    }

    std::vector<std::pair<std::int64_t, Rational>> trace;
    std::int64_t extension = start;
    NewtonNumberReport previous = newton_number(extend_to_convenient(polyhedra, extension), n, options);
    trace.emplace_back(extension, previous.nu);
    for (int step = 1; step <= policy.max_doublings; ++step) {
        if (extension > std::numeric_limits<std::int64_t>::max() / 2)
            throw StabilizationError("extension exponent overflow before stabilization", trace);
        const std::int64_t next = extension * 2;
        NewtonNumberReport current = newton_number(extend_to_convenient(polyhedra, next), n, options);
        trace.emplace_back(next, current.nu);
        if (current.nu == previous.nu) {
            previous.convenient = flags;
            previous.extension_used = extension;
            previous.stabilization_trace = std::move(trace);
            return previous;
        }
        previous = std::move(current);
        extension = next;
    }
    throw StabilizationError("mixed Newton number did not stabilize within " + std::to_string(policy.max_doublings) +
                                 " doublings",
                             trace);
}

NewtonNumberReport milnor_number(const AnalyticMapGerm& germ, const StabilizationPolicy& policy,
                                 const MixedOptions& options)
{
    const auto polyhedra = newton_polyhedra(germ);
    NewtonNumberReport report = newton_number_nonconvenient(polyhedra, germ.dimension(), policy, options);
    if (is_integer(report.nu) && sgn(report.nu) >= 0 && report.nu.get_num().fits_slong_p()) {
        report.mu = report.nu.get_num().get_si();
    } else {
        report.warnings.push_back("nu = " + to_string(report.nu) +
                                  " is not a non-negative integer; the germ is likely degenerate or not an ICIS");
    }
    return report;
}

}  // namespace milnum
