// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "support.hpp"

#include "cli_app.hpp"
#include "milnum/covolume.hpp"
#include "milnum/mixed.hpp"
#include "milnum/nondegen.hpp"
#include "milnum/parser.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace milnum;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Run {
    int status = -1;
    nlohmann::json doc;
    double seconds = 0;
};

Run milnor(const std::string& text)
{
    cli::RunConfig config;
    config.expression = text;
    std::ostringstream out, err;
    const auto start = Clock::now();
    Run r;
    r.status = cli::run(config, out, err);
    r.seconds = seconds_since(start);
    r.doc = nlohmann::json::parse(out.str());
    return r;
}

bool has_mu(const Run& r, long expected)
{
    return r.status == 0 && r.doc.contains("mu") && r.doc["mu"].get<long>() == expected &&
           r.doc["nu"] == std::to_string(expected);
}

/// Collects failures for one criterion; the first few are echoed.
class Criterion {
public:
    void fail(const std::string& what)
    {
        if (failures_++ < 5) std::cerr << "    " << what << "\n";
    }
    void require(bool ok, const std::string& what)
    {
        if (!ok) fail(what);
    }
    bool passed() const { return failures_ == 0; }
    int failures() const { return failures_; }

private:
    int failures_ = 0;
};

std::string power_sum(const std::vector<long>& exponents)
{
    const auto names = default_variable_names(exponents.size());
    std::string text;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        text += (i ? " + " : "") + names[i] + "^" + std::to_string(exponents[i]);
    return text;
}

// Alternating sum over coordinate subsets: the covolume of the simplex with
// intercepts a_i in R^I is prod a_i / |I|!, so i! vol_i reduces to prod a_i.
long brieskorn_oracle(const std::vector<long>& a)
{
    const std::size_t n = a.size();
    long total = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        long product = 1;
        std::size_t size = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) {
                product *= a[i];
                ++size;
            }
        total += ((n - size) % 2 == 0 ? 1 : -1) * product;
    }
    return total;
}

// dim C[x,y]/(x^a, y^b): monomials x^i y^j outside the ideal.
long monomial_colength(long a, long b)
{
    long count = 0;
    for (long i = 0; i < a + b; ++i)
        for (long j = 0; j < a + b; ++j)
            if (i < a && j < b) ++count;
    return count;
}

void criterion_1(Criterion& c)
{
    // 2! * (area 3) - 1! * (2 + 3) + 1
    const long hand = 2 * 3 - (2 + 3) + 1;
    const auto r = milnor("x^2+y^3");
    c.require(has_mu(r, hand), "cusp mu != " + std::to_string(hand) + ": " + r.doc.dump());
    c.require(hand == (2 - 1) * (3 - 1), "hand evaluation disagrees with the classical cusp value");
    c.require(r.seconds < 1.0, "cusp took " + std::to_string(r.seconds) + " s");
}

void criterion_2(Criterion& c)
{
    for (long a = 2; a <= 6; ++a)
        for (long b = 2; b <= 6; ++b) {
            const long expected = brieskorn_oracle({a, b});
            c.require(expected == (a - 1) * (b - 1), "oracle mismatch");
            const auto r = milnor(power_sum({a, b}));
            c.require(has_mu(r, expected), power_sum({a, b}) + " gave " + r.doc.value("nu", "?"));
            c.require(r.seconds < 5.0, power_sum({a, b}) + " took " + std::to_string(r.seconds) + " s");
        }
    for (long a = 2; a <= 4; ++a)
        for (long b = 2; b <= 4; ++b)
            for (long cc = 2; cc <= 4; ++cc) {
                const long expected = brieskorn_oracle({a, b, cc});
                c.require(expected == (a - 1) * (b - 1) * (cc - 1), "oracle mismatch");
                const auto r = milnor(power_sum({a, b, cc}));
                c.require(has_mu(r, expected), power_sum({a, b, cc}) + " gave " + r.doc.value("nu", "?"));
                c.require(r.seconds < 5.0, power_sum({a, b, cc}) + " took " + std::to_string(r.seconds) + " s");
            }
}

void criterion_3(Criterion& c)
{
    for (const char* text : {"x+y", "x+y+z"}) c.require(has_mu(milnor(text), 0), std::string(text) + " is not smooth");
}

void criterion_4(Criterion& c)
{
    for (long a = 1; a <= 4; ++a)
        for (long b = 1; b <= 4; ++b) {
            const long expected = monomial_colength(a, b) - 1;
            const std::string text = "x^" + std::to_string(a) + "; y^" + std::to_string(b);
            const auto r = milnor(text);
            c.require(has_mu(r, expected), text + " gave " + r.doc.dump());
            c.require(r.doc.contains("extension_used"), text + " has no extension");
            const auto& trace = r.doc.value("stabilization_trace", nlohmann::json::array());
            c.require(trace.size() >= 2, text + " trace too short");
            for (const auto& step : trace)
                c.require(step["nu"] == std::to_string(expected), text + " trace not constant: " + trace.dump());
            c.require(r.seconds < 5.0, text + " took " + std::to_string(r.seconds) + " s");
        }
}

void criterion_5(Criterion& c)
{
    // The smooth component x = 0 leaves the plane curve y^2 + z^3.
    const long plane = brieskorn_oracle({2, 3});
    const auto r = milnor("x; y^2+z^3");
    c.require(has_mu(r, plane), "(x; y^2+z^3) gave " + r.doc.dump());
}

void criterion_6(Criterion& c)
{
    std::mt19937_64 rng(0xC0701);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = testing::random_support(rng, 2, 12, 8, true);
        const auto engine = covolume(testing::poly(s));
        const auto oracle = testing::staircase_covolume(s);
        c.require(engine == oracle, "covolume " + to_string(engine) + " vs staircase " + to_string(oracle));
    }
}

void criterion_7(Criterion& c)
{
    std::mt19937_64 rng(0x9017);
    std::mt19937_64 fresh(0xF4E5);
    std::uniform_int_distribution<std::int64_t> weight(1, 40);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t p = 2 + trial % 2;
        const std::size_t n = p == 3 ? 3 : 2 + trial % 4 / 2;
        std::vector<NewtonPolyhedron> family;
        for (std::size_t i = 0; i < p; ++i) family.push_back(testing::poly(testing::random_support(rng, n, 7, 7, true)));
        const auto table = mixed_covolumes(family);
        for (int k = 0; k < 10; ++k) {
            std::vector<std::int64_t> lambda;
            for (std::size_t i = 0; i < p; ++i) lambda.push_back(weight(fresh));
            const auto direct = covolume(minkowski_weighted_sum(family, lambda));
            c.require(table.covolume_polynomial(lambda) == direct, "polynomial misses a fresh sample");
        }
    }
}

void criterion_8(Criterion& c)
{
    std::mt19937_64 rng(0x8008);
    for (std::size_t n : {2, 3})
        for (int trial = 0; trial < 50; ++trial) {
            const std::vector<NewtonPolyhedron> one{testing::poly(testing::random_support(rng, n, 9, 9, true))};
            const auto nu = newton_number(one, n).nu;
            const auto direct = kouchnirenko_number(one.front());
            c.require(nu == direct, "newton number " + to_string(nu) + " vs direct " + to_string(direct));
        }
}

void criterion_9(Criterion& c)
{
    std::mt19937_64 rng(0x1A7A);

    // Component order.
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 3;
        const std::size_t p = 2 + trial % 2;
        std::vector<ExponentSet> supports;
        for (std::size_t i = 0; i < p; ++i) supports.push_back(testing::random_support(rng, n, 5, 6, true));
        const auto base = milnor_number(parse_map(testing::germ_text(supports), {.variables = std::nullopt, .dimension = n}));
        std::shuffle(supports.begin(), supports.end(), rng);
        const auto permuted =
            milnor_number(parse_map(testing::germ_text(supports), {.variables = std::nullopt, .dimension = n}));
        c.require(base.nu == permuted.nu, "nu depends on component order");
    }

    // Truncation box.
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const auto g = testing::poly(testing::random_support(rng, n, 8, 10, true));
        std::int64_t m = 0;
        for (const auto& v : g.vertices())
            for (auto x : v.entries()) m = std::max(m, x);
        c.require(covolume_with_box(g, m) == covolume_with_box(g, m + 1), "covolume depends on the box");
    }

    // Weighted homogeneity of every exported face polynomial.
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + trial % 2;
        const std::size_t p = 1 + trial % n;
        std::vector<ExponentSet> supports;
        for (std::size_t i = 0; i < p; ++i) supports.push_back(testing::random_support(rng, n, 6, 7, trial % 3 != 0));
        const auto germ = parse_map(testing::germ_text(supports), {.variables = std::nullopt, .dimension = n});
        for (const auto& f : enumerate_face_systems(germ))
            for (std::size_t i = 0; i < p; ++i)
                c.require(satisfies_euler_relation(f.system.polynomials[i], f.system.direction, f.system.faces[i].value),
                          "face polynomial is not weighted homogeneous");
    }

    // Sum faces are sums of their parts.
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 2 + trial % 2;
        std::vector<ExponentSet> supports;
        for (std::size_t i = 0; i < 2; ++i) supports.push_back(testing::random_support(rng, n, 6, 7, trial % 2 == 0));
        const auto germ = parse_map(testing::germ_text(supports), {.variables = std::nullopt, .dimension = n});
        for (const auto& f : enumerate_face_systems(germ))
            c.require(minkowski_face_vertices(f.system.faces) == f.sum_face.vertices, "face is not the sum of its parts");
    }
}

void criterion_10(Criterion& c)
{
    std::mt19937_64 rng(0x4C3);
    double worst = 0;
    for (int trial = 0; trial < 12; ++trial) {
        const bool convenient = trial % 2 == 0;
        std::vector<ExponentSet> supports;
        for (int i = 0; i < 3; ++i) supports.push_back(testing::random_support(rng, 4, 9, 20, convenient));
        const std::string text = testing::germ_text(supports);
        const auto r = milnor(text);
        worst = std::max(worst, r.seconds);
        c.require(r.status == 0 || r.status == 2, "pipeline failed on " + text + ": " + r.doc.dump());
        c.require(r.seconds < 10.0, text + " took " + std::to_string(r.seconds) + " s");
    }
    std::cerr << "    slowest germ " << worst << " s\n";
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
        {"cusp x^2+y^3 has mu 2 in under 1 s", criterion_1},
        {"Brieskorn-Pham grid in two and three variables", criterion_2},
        {"smooth germs have mu 0", criterion_3},
        {"monomial pairs (x^a; y^b) through the extension path", criterion_4},
        {"(x; y^2+z^3) reduces to the plane cusp", criterion_5},
        {"planar covolumes match the staircase oracle", criterion_6},
        {"interpolated covolume polynomials reproduce fresh samples", criterion_7},
        {"one-component newton number equals the direct alternating sum", criterion_8},
        {"permutation, box, Euler and reconstruction invariants", criterion_9},
        {"n=4, p=3, 20-point germs finish in under 10 s", criterion_10},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c;
        const auto start = Clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.fail(std::string("exception: ") + e.what());
        }
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2f s", seconds_since(start));
        std::cout << (c.passed() ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first << " ("
                  << timing << (c.passed() ? "" : ", " + std::to_string(c.failures()) + " failures") << ")"
                  << std::endl;
        if (!c.passed()) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
