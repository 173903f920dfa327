#pragma once

#include "milnum/error.hpp"
#include "milnum/newton_polyhedron.hpp"
#include "milnum/polynomial.hpp"
#include "milnum/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace milnum {

/// How independent covolume evaluations are scheduled. Results are identical
/// either way; `serial` is the reference path.
enum class Execution { serial, parallel };

struct MixedOptions {
    /// Fresh lambda tuples at which the interpolated covolume polynomial is re-checked.
    std::size_t held_out = 10;
    Execution execution = Execution::parallel;
    std::uint64_t seed = 0x6d696c6e756dULL;
};

using Composition = std::vector<int>;

/// All (k_1..k_p) with k_i >= 0 and sum d, in lexicographic order.
std::vector<Composition> compositions(int d, std::size_t p);

/// Mixed covolumes covol(G_1^{k_1}, ..., G_p^{k_p}) for every composition of d.
class MixedCovolumeTable {
public:
    MixedCovolumeTable() = default;
    MixedCovolumeTable(std::size_t dimension, std::size_t count, std::map<Composition, Rational> entries);

    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t count() const noexcept { return count_; }
    const std::map<Composition, Rational>& entries() const noexcept { return entries_; }
    const Rational& at(const Composition& k) const;

    /// sum over compositions of d!/(k_1!...k_p!) * entry * prod lambda_i^{k_i}.
    Rational covolume_polynomial(std::span<const std::int64_t> lambda) const;

    /// Sum of the entries with every k_i >= 1.
    Rational interior_sum() const;

private:
    std::size_t dimension_ = 0;
    std::size_t count_ = 0;
    std::map<Composition, Rational> entries_;
};

/// Recovers the mixed covolumes by exact interpolation of
/// lambda -> covol(lambda_1 G_1 + ... + lambda_p G_p), then re-checks the
/// polynomial at `options.held_out` fresh tuples.
/// Errors: non_convenient, dimension_mismatch, singular_system, interpolation_mismatch.
MixedCovolumeTable mixed_covolumes(std::span<const NewtonPolyhedron> polyhedra, const MixedOptions& options = {});

/// Covolume of the weighted Minkowski sum (one sample of the polynomial).
Rational weighted_sum_covolume(std::span<const NewtonPolyhedron> polyhedra, std::span<const std::int64_t> lambda);

struct SubsetContribution {
    /// Sorted 1-based coordinate indices.
    std::vector<std::size_t> subset;
    /// (-1)^{n-j} j! a_j for j = |I|.
    Rational contribution;
    MixedCovolumeTable table;
};

struct NewtonNumberReport {
    std::size_t n = 0;
    std::size_t p = 0;
    Rational nu;
    std::optional<std::int64_t> mu;
    std::vector<SubsetContribution> per_subset;
    Rational constant_term;
    std::vector<bool> convenient;
    std::optional<std::int64_t> extension_used;
    std::vector<std::pair<std::int64_t, Rational>> stabilization_trace;
    std::vector<std::string> warnings;
};

/// Mixed Newton number of convenient polyhedra in dimension n (p <= n).
NewtonNumberReport newton_number(std::span<const NewtonPolyhedron> polyhedra, std::size_t n,
                                 const MixedOptions& options = {});

/// sum_{i=0}^n (-1)^{n-i} i! sum_{|I|=i} covol(Gamma^I), evaluated directly.
Rational kouchnirenko_number(const NewtonPolyhedron& polyhedron);

/// The same sum with one entry per coordinate subset (i >= 1) and the i = 0
/// term as constant_term.
NewtonNumberReport kouchnirenko_report(const NewtonPolyhedron& polyhedron);

/// Adds N*e_j to every polyhedron that has no generator on axis j.
std::vector<NewtonPolyhedron> extend_to_convenient(std::span<const NewtonPolyhedron> polyhedra, std::int64_t extension);
std::vector<NewtonPolyhedron> extend_to_convenient(const AnalyticMapGerm& germ, std::int64_t extension);

struct StabilizationPolicy {
    /// Defaults to n * (1 + largest exponent in any generator).
    std::optional<std::int64_t> initial_extension;
    int max_doublings = 8;
};

std::int64_t default_initial_extension(std::span<const NewtonPolyhedron> polyhedra);

class StabilizationError : public Error {
public:
    StabilizationError(const std::string& message, std::vector<std::pair<std::int64_t, Rational>> trace)
        : Error(ErrorCode::no_stabilization, message), trace_(std::move(trace)) {}

    const std::vector<std::pair<std::int64_t, Rational>>& trace() const noexcept { return trace_; }

private:
    std::vector<std::pair<std::int64_t, Rational>> trace_;
};

/// Evaluates nu on axis extensions N0, 2N0, 4N0, ... and returns the first value
/// that repeats under doubling. Convenient input is evaluated once, unextended.
/// Errors: StabilizationError when no two consecutive values agree.
NewtonNumberReport newton_number_nonconvenient(std::span<const NewtonPolyhedron> polyhedra, std::size_t n,
                                               const StabilizationPolicy& policy = {},
                                               const MixedOptions& options = {});

/// Newton polyhedra of the components, nu via the (non)convenient path, and
/// mu = nu when nu is a non-negative integer. Non-degeneracy is not verified.
NewtonNumberReport milnor_number(const AnalyticMapGerm& germ, const StabilizationPolicy& policy = {},
                                 const MixedOptions& options = {});

std::vector<NewtonPolyhedron> newton_polyhedra(const AnalyticMapGerm& germ);

}  // namespace milnum
