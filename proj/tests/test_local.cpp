#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <chroma/generators.hpp>
#include <chroma/local.hpp>

#include <cmath>

using namespace chroma;

TEST_CASE("proper edge colorings")
{
    auto c4 = cycle_graph(4);
    CHECK(is_proper_edge_coloring(c4, EdgeColoring::parse("0,1,1,0")));
    CHECK_FALSE(is_proper_edge_coloring(c4, EdgeColoring::parse("0,0,1,1")));
    CHECK_THROWS_AS((void)is_proper_edge_coloring(c4, EdgeColoring::parse("0")), ColoringError);
}

TEST_CASE("polynomial arithmetic")
{
    Polynomial k = Polynomial::monomial(1);
    Polynomial one({1});
    auto p = k * (k - one);
    CHECK(p.to_string() == "0,-1,1");
    CHECK(p(BigInt(5)) == 20);
    CHECK((p - p).is_zero());
    CHECK((p - p).to_string() == "0");
    CHECK((p - p).degree() == -1);
    CHECK((p + one).coefficients().size() == 3);
}

TEST_CASE("known chromatic polynomials")
{
    CHECK(chromatic_polynomial(complete_graph(3)).to_string() == "0,2,-3,1");
    CHECK(chromatic_polynomial(Graph(2, {})).to_string() == "0,0,1");
    CHECK(chromatic_polynomial(Graph(0, {})).to_string() == "1");
    CHECK(chromatic_polynomial(cycle_graph(4)).to_string() == "0,-3,6,-4,1");
    auto petersen = chromatic_polynomial(petersen_graph());
    CHECK(evaluate_polynomial(petersen, 2) == 0);
    CHECK(evaluate_polynomial(petersen, 3) == 120);
    CHECK(evaluate_polynomial(petersen, 4) == 12960);
    CHECK(evaluate_polynomial(chromatic_polynomial(complete_graph(3)), 2) == 0);
    CHECK(evaluate_polynomial(chromatic_polynomial(complete_graph(3)), 3) == 6);
    CHECK(evaluate_polynomial(chromatic_polynomial(complete_graph(3)), 4) == 24);
}

TEST_CASE("chromatic polynomial counts proper vertex colorings")
{
    for (const auto & g : support::connected_graphs(5)) {
        oracle::Small s(g);
        auto f = chromatic_polynomial(g);
        CHECK(f.degree() == static_cast<long>(g.order()));
        for (std::size_t t = 0; t <= 4; ++t)
            CHECK(evaluate_polynomial(f, t) == oracle::vertex_colorings(s, t));
    }
    Graph two_parts(5, {{0, 1}, {2, 3}, {3, 4}});
    CHECK(evaluate_polynomial(chromatic_polynomial(two_parts), 3) == oracle::vertex_colorings(oracle::Small(two_parts), 3));
}

TEST_CASE("edge chromatic polynomial counts proper edge colorings")
{
    for (const auto & g : support::connected_graphs(4)) {
        oracle::Small s(g);
        auto f = edge_chromatic_polynomial(g);
        for (std::size_t t = 0; t <= 4; ++t)
            CHECK(evaluate_polynomial(f, t) == oracle::edge_colorings(s, t));
    }
}

TEST_CASE("four color check")
{
    CHECK(four_color_check(complete_graph(4)));
    CHECK_FALSE(four_color_check(complete_graph(5)));
    CHECK(four_color_check(petersen_graph()));
}

TEST_CASE("local lemma threshold")
{
    const double e = std::exp(1.0);
    CHECK(lll_condition(0.0, 0));
    CHECK(lll_condition(1.0 / (e * 3), 2));
    CHECK_FALSE(lll_condition(0.2, 2));
    CHECK(lll_condition(std::nextafter(1.0 / (e * 3), 1.0), 2));
    CHECK_FALSE(lll_condition(std::nextafter(std::nextafter(1.0 / (e * 3), 1.0), 1.0), 2));
    CHECK_THROWS_AS((void)lll_condition(-0.1, 2), std::invalid_argument);
    CHECK_THROWS_AS((void)lll_condition(1.5, 2), std::invalid_argument);
    CHECK_THROWS_AS((void)lll_condition(0.1, -1), std::invalid_argument);
}

TEST_CASE("Nullstellensatz product vanishes exactly on improper edge colorings")
{
    for (const auto & g : support::connected_graphs(4)) {
        oracle::Small s(g);
        oracle::any_labeled(g.size(), 3, [&](const std::vector<int> & c) {
            std::vector<std::int64_t> x(c.begin(), c.end());
            CHECK((nullstellensatz_value(g, x) != 0) == oracle::proper_edge_coloring(s, c));
            return false;
        });
    }
    std::vector<std::int64_t> x{1, 2, 4};
    CHECK(nullstellensatz_value(star_graph(3), x) == BigInt(-1 * -3 * -2));
    CHECK(nullstellensatz_value(path_graph(2), std::vector<std::int64_t>{7}) == 1);
    CHECK_THROWS_AS(nullstellensatz_value(path_graph(3), std::vector<std::int64_t>{1}), ColoringError);
}
