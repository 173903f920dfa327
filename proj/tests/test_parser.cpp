#include "support.hpp"

#include "milnum/parser.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace milnum;

namespace {

ErrorCode code_of(const std::string& text)
{
    try {
        parse_map(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a parse failure for '" << text << "'");
    return ErrorCode::io_error;
}

Polynomial::TermMap terms(std::initializer_list<std::pair<long, ExponentVector>> list)
{
    Polynomial::TermMap out;
    for (const auto& [c, e] : list) out.emplace(e, GaussianRational(Rational(c)));
    return out;
}

}  // namespace

TEST_SUITE("parser")
{
    TEST_CASE("monomials are read term by term")
    {
        const auto germ = parse_map("x^2 + y^3");
        CHECK(germ.dimension() == 2);
        CHECK(germ.component_count() == 1);
        CHECK(germ.component(0).terms() == terms({{1, {2, 0}}, {1, {0, 3}}}));

        const auto indexed = parse_map("3*x1*x2^4 - x1^5");
        CHECK(indexed.component(0).terms() == terms({{3, {1, 4}}, {-1, {5, 0}}}));
    }

    TEST_CASE("cancellation to zero is an error")
    {
        CHECK(code_of("x^2 - x^2") == ErrorCode::zero_polynomial);
        CHECK(code_of("x + y; y - y") == ErrorCode::zero_polynomial);
    }

    TEST_CASE("constant terms and floats are rejected")
    {
        CHECK(code_of("1 + x") == ErrorCode::constant_term);
        CHECK(code_of("x + 2 - 2 + 3") == ErrorCode::constant_term);
        CHECK(code_of("1.5*x") == ErrorCode::syntax_error);
    }

    TEST_CASE("too many components")
    {
        CHECK(code_of("x; x^2") == ErrorCode::too_many_components);
    }

    TEST_CASE("syntax errors carry a position")
    {
        try {
            parse_map("x^2 + * y");
            FAIL("no error");
        } catch (const ParseError& e) {
            CHECK(e.position() == 6);
            CHECK(e.code() == ErrorCode::syntax_error);
        }
        CHECK(code_of("x^^2") == ErrorCode::syntax_error);
        CHECK(code_of("x + q") == ErrorCode::syntax_error);
        CHECK(code_of("x + x1") == ErrorCode::syntax_error);
        CHECK(code_of("x +") == ErrorCode::syntax_error);
    }

    TEST_CASE("coefficients combine and may be Gaussian")
    {
        const auto germ = parse_map("2*x*y + x*y - 1/2*y^2 + (1+2i)*x^3");
        const auto& t = germ.component(0).terms();
        REQUIRE(t.size() == 3);
        CHECK(t.at(ExponentVector{1, 1}) == GaussianRational(Rational(3)));
        CHECK(t.at(ExponentVector{0, 2}) == GaussianRational(Rational(-1, 2)));
        CHECK(t.at(ExponentVector{3, 0}) == GaussianRational(Rational(1), Rational(2)));
    }

    TEST_CASE("explicit variables and declared dimension")
    {
        ParseOptions options;
        options.variables = std::vector<std::string>{"a", "b", "c"};
        const auto germ = parse_map("a*c^2 + b", options);
        CHECK(germ.dimension() == 3);
        CHECK(germ.component(0).support() == ExponentSet{{0, 1, 0}, {1, 0, 2}});

        ParseOptions wide;
        wide.dimension = 4;
        CHECK(parse_map("x^2", wide).dimension() == 4);

        ParseOptions narrow;
        narrow.dimension = 1;
        CHECK_THROWS_AS(parse_map("x + y", narrow), Error);
    }

    TEST_CASE("support")
    {
        CHECK(support(parse_map("x^2+y^3").component(0)) == ExponentSet{{0, 3}, {2, 0}});
        CHECK(support(parse_map("x*y + x^2*y^3").component(0)) == ExponentSet{{1, 1}, {2, 3}});
        CHECK(support(parse_map("x^5").component(0)) == ExponentSet{{5}});
    }

    TEST_CASE("serialization round-trips")
    {
        for (const char* text : {"x^2 + y^3", "3*x1*x2^4 - x1^5", "x - 1/3*y*z^2; (2-i)*z + y^7",
                                 "x1*x5 + x2^2; x3; x4 - x5^3"}) {
            const auto germ = parse_map(text);
            CHECK(parse_map(to_text(germ), {.variables = std::nullopt, .dimension = germ.dimension()}) == germ);
        }
    }

    TEST_CASE("term order and whitespace do not matter")
    {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 30; ++trial) {
            const auto s = testing::random_support(rng, 3, 6, 7, trial % 2 == 0);
            std::vector<std::string> pieces;
            for (const auto& e : s) pieces.push_back(testing::germ_text({{e}}));
            const auto reference = parse_map(testing::germ_text({s}));
            std::shuffle(pieces.begin(), pieces.end(), rng);
            std::string text;
            for (const auto& piece : pieces) text += (text.empty() ? "" : "   +") + piece + " ";
            CHECK(parse_map(text, {.variables = std::nullopt, .dimension = 3}) ==
                  parse_map(testing::germ_text({s}), {.variables = std::nullopt, .dimension = 3}));
            for (const auto& e : reference.component(0).support()) CHECK(!e.is_zero());
        }
    }

    TEST_CASE("JSON support format")
    {
        const auto germ = parse_support_json(
            R"J({"n": 3, "components": [[[1,0,0]], [[0,2,0],[0,0,3]]], "coefficients": [[1], ["-1/2", "(1+i)"]]})J");
        CHECK(germ.dimension() == 3);
        CHECK(germ.component_count() == 2);
        CHECK(germ.component(1).terms().at(ExponentVector{0, 2, 0}) == GaussianRational(Rational(-1, 2)));

        const auto plain = parse_support_json(R"({"n": 2, "components": [[[2,0],[0,3]]]})");
        CHECK(plain == parse_map("x^2 + y^3"));

        CHECK_THROWS_AS(parse_support_json(R"({"n": 2, "components": [[[2,0,1]]]})"), Error);
        CHECK_THROWS_AS(parse_support_json(R"({"n": 2, "components": [[[-1,2]]]})"), Error);
        CHECK_THROWS_AS(parse_support_json(R"({"n": 2, "components": [[[0,0]]]})"), Error);
        CHECK_THROWS_AS(parse_support_json("{"), ParseError);
    }
}
