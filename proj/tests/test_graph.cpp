#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <chroma/generators.hpp>
#include <chroma/graph.hpp>
#include <chroma/graph6.hpp>

#include <set>

using namespace chroma;

TEST_CASE("graph construction sorts edges canonically")
{
    Graph g(4, {{3, 2}, {0, 1}, {1, 3}, {0, 3}});
    REQUIRE(g.size() == 4);
    CHECK(g.edge(0) == Edge{0, 1});
    CHECK(g.edge(1) == Edge{0, 3});
    CHECK(g.edge(2) == Edge{1, 3});
    CHECK(g.edge(3) == Edge{2, 3});
    CHECK(g.edge_between(3, 1) == EdgeIndex{2});
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.degree(3) == 3);
    CHECK(g.max_degree() == 3);
}

TEST_CASE("graph construction rejects malformed edge lists")
{
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), GraphError);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), GraphError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), GraphError);
    Graph g(2, {{0, 1}});
    CHECK_THROWS_AS((void)g.edge(1), GraphError);
    CHECK_THROWS_AS(g.require_vertex(2), GraphError);
}

TEST_CASE("graph6 decodes known strings")
{
    auto star = parse_graph6("D?{");
    CHECK(star == Graph(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
    CHECK(parse_graph6("@").order() == 1);
    CHECK(parse_graph6("?").order() == 0);
    CHECK(parse_graph6(">>graph6<<D?{\n") == star);
    CHECK(write_graph6(complete_graph(1)) == "@");
    CHECK(write_graph6(complete_graph(4)) == "C~");
    CHECK(write_graph6(petersen_graph()) == "IheA@GUAo");
}

TEST_CASE("graph6 round trips every small graph and large orders")
{
    for (const auto & g : support::connected_graphs(6))
        CHECK(parse_graph6(write_graph6(g)) == g);
    auto big = path_graph(70);
    auto text = write_graph6(big);
    CHECK(text.substr(0, 4) == "~?@E");
    CHECK(parse_graph6(text) == big);
}

TEST_CASE("graph6 rejects malformed input")
{
    CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("D?"), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("D?{?"), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("D? {"), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("A`"), Graph6Error);
    CHECK_THROWS_AS(parse_graph6("~?@D"), Graph6Error);
}

TEST_CASE("generators")
{
    CHECK(path_graph(4).size() == 3);
    CHECK(cycle_graph(5).size() == 5);
    CHECK(complete_graph(5).size() == 10);
    auto k23 = complete_bipartite_graph(2, 3);
    CHECK(k23.size() == 6);
    CHECK_FALSE(k23.adjacent(0, 1));
    CHECK(k23.adjacent(1, 4));
    CHECK(star_graph(3).degree(0) == 3);
    CHECK(petersen_graph().size() == 15);
    CHECK(diameter(petersen_graph()) == 2);
    CHECK_THROWS(generate("nonsense", {}));
    CHECK_THROWS(generate("cycle", {2}));
}

TEST_CASE("connected graphs up to isomorphism")
{
    const std::size_t expected[] = {0, 1, 1, 2, 6, 21, 112};
    auto all = support::connected_graphs(6);
    for (std::size_t n = 1; n <= 6; ++n) {
        auto count = std::count_if(all.begin(), all.end(), [&](const Graph & g) { return g.order() == n; });
        CHECK(static_cast<std::size_t>(count) == expected[n]);
    }
    std::set<std::string> keys;
    for (const auto & g : all) {
        CHECK(is_connected(g));
        keys.insert(std::to_string(g.order()) + ":" + canonical_key(g));
    }
    CHECK(keys.size() == all.size());
}

TEST_CASE("canonical key is invariant under relabelling")
{
    Graph a(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}});
    Graph b(4, {{3, 2}, {2, 0}, {0, 1}, {2, 1}});
    CHECK(canonical_key(a) == canonical_key(b));
    CHECK(canonical_key(a) != canonical_key(cycle_graph(4)));
    CHECK(canonical_form(a) == canonical_form(b));
}

TEST_CASE("paths and distances")
{
    auto g = cycle_graph(6);
    CHECK(diameter(g) == 3);
    std::vector<Vertex> walk{0, 1, 2, 3};
    auto p = make_path(g, walk);
    CHECK(p.length() == 3);
    CHECK(is_simple_path(g, p));
    std::vector<Vertex> gap{0, 2};
    CHECK_THROWS_AS(make_path(g, gap), GraphError);
    CHECK_THROWS_AS(diameter(Graph(3, {{0, 1}})), GraphError);
    CHECK_FALSE(is_connected(Graph(3, {{0, 1}})));
}

TEST_CASE("Menger: disjoint path count equals the minimum separator")
{
    for (const auto & g : support::connected_graphs(5)) {
        oracle::Small s(g);
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = u + 1; v < g.order(); ++v) {
                auto edge = max_disjoint_paths(g, u, v, DisjointMode::edge);
                CHECK(edge.count == oracle::disjoint_paths(s, u, v, false));
                CHECK(edge.count == oracle::min_separator(s, u, v, false));
                REQUIRE(edge.paths.size() == edge.count);
                std::set<EdgeIndex> used;
                for (const auto & p : edge.paths) {
                    CHECK(is_simple_path(g, p));
                    CHECK(p.vertices.front() == u);
                    CHECK(p.vertices.back() == v);
                    for (auto e : p.edges)
                        CHECK(used.insert(e).second);
                }
                auto vertex = max_disjoint_paths(g, u, v, DisjointMode::vertex);
                CHECK(vertex.count == oracle::disjoint_paths(s, u, v, true));
                if (!g.adjacent(u, v))
                    CHECK(vertex.count == oracle::min_separator(s, u, v, true));
            }
    }
    CHECK(max_disjoint_paths(cycle_graph(4), 0, 2, DisjointMode::edge).count == 2);
    CHECK(connectivity(complete_graph(4), DisjointMode::vertex) == 3);
}

TEST_CASE("u-v cut enumeration lists every bipartition once")
{
    auto g = complete_graph(5);
    UvCutEnumerator cuts(g, 1, 3);
    std::set<std::vector<std::size_t>> sides;
    while (auto cut = cuts.next()) {
        CHECK(cut->side.contains(1));
        CHECK_FALSE(cut->side.contains(3));
        CHECK(cut->cut == crossing_cut(g, cut->side));
        sides.insert(cut->side.members());
    }
    CHECK(sides.size() == 8);
    VertexSet empty(5);
    CHECK_THROWS(crossing_cut(g, empty));
}

TEST_CASE("line graph, deletion, contraction and induced subgraphs")
{
    auto star = star_graph(3);
    CHECK(line_graph(star) == complete_graph(3));
    CHECK(line_graph(cycle_graph(5)).size() == 5);
    auto c4 = cycle_graph(4);
    CHECK(delete_edge(c4, 0).size() == 3);
    auto contracted = contract_edge(c4, 0);
    CHECK(contracted.order() == 3);
    CHECK(contracted == complete_graph(3));
    auto k4 = complete_graph(4);
    auto merged = contract_edge(k4, 0);
    CHECK(merged == complete_graph(3));
    std::vector<Vertex> keep{1, 2, 3};
    CHECK(induced_subgraph(k4, keep) == complete_graph(3));
    CHECK(write_dot(path_graph(2)).find("0 -- 1") != std::string::npos);
}
