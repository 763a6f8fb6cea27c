#include <chroma/generators.hpp>

#include <algorithm>
#include <map>
#include <tuple>

namespace chroma {

Graph path_graph(std::size_t n)
{
    if (n == 0)
        throw GraphError("path needs at least one vertex");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i + 1 < n; ++i)
        pairs.emplace_back(i, i + 1);
    return Graph(n, pairs);
}

Graph cycle_graph(std::size_t n)
{
    if (n < 3)
        throw GraphError("cycle needs at least three vertices");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i < n; ++i)
        pairs.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return Graph(n, pairs);
}

Graph complete_graph(std::size_t n)
{
    if (n == 0)
        throw GraphError("complete graph needs at least one vertex");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            pairs.emplace_back(i, j);
    return Graph(n, pairs);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b)
{
    if (a == 0 || b == 0)
        throw GraphError("complete bipartite graph needs two nonempty sides");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i < a; ++i)
        for (Vertex j = 0; j < b; ++j)
            pairs.emplace_back(i, static_cast<Vertex>(a + j));
    return Graph(a + b, pairs);
}

Graph star_graph(std::size_t leaves)
{
    if (leaves == 0)
        throw GraphError("star needs at least one leaf");
    return complete_bipartite_graph(1, leaves);
}

Graph petersen_graph()
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i < 5; ++i) {
        pairs.emplace_back(i, (i + 1) % 5);
        pairs.emplace_back(i, i + 5);
        pairs.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph(10, pairs);
}

namespace {

using Ordering = std::vector<Vertex>;

std::string adjacency_string(const Graph & g, const Ordering & order)
{
    std::string key;
    key.reserve(g.order() * (g.order() - 1) / 2);
    for (std::size_t j = 1; j < order.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            key.push_back(g.adjacent(order[i], order[j]) ? '1' : '0');
    return key;
}

// Vertices sorted by (degree, sorted neighbour degrees), largest first, split
// into classes of equal invariant.
std::vector<std::vector<Vertex>> invariant_classes(const Graph & g)
{
    using Invariant = std::pair<std::size_t, std::vector<std::size_t>>;
    std::vector<std::pair<Invariant, Vertex>> keyed;
    for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<std::size_t> nd;
        for (const auto & inc : g.incident(v))
            nd.push_back(g.degree(inc.neighbour));
        std::sort(nd.rbegin(), nd.rend());
        keyed.push_back({{g.degree(v), std::move(nd)}, v});
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto & a, const auto & b) { return a.first > b.first; });
    std::vector<std::vector<Vertex>> classes;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first)
            classes.emplace_back();
        classes.back().push_back(keyed[i].second);
    }
    return classes;
}

std::pair<std::string, Ordering> canonical_ordering(const Graph & g)
{
    auto classes = invariant_classes(g);
    for (auto & c : classes)
        std::sort(c.begin(), c.end());

    std::string best;
    Ordering best_order;
    bool first = true;
    // Odometer over the permutations of every class.
    while (true) {
        Ordering order;
        for (const auto & c : classes)
            order.insert(order.end(), c.begin(), c.end());
        auto key = adjacency_string(g, order);
        if (first || key < best) {
            best = std::move(key);
            best_order = std::move(order);
            first = false;
        }
        std::size_t i = 0;
        while (i < classes.size() && !std::next_permutation(classes[i].begin(), classes[i].end()))
            ++i;
        if (i == classes.size())
            break;
    }
    return {best, best_order};
}

std::vector<std::size_t> expect_params(std::string_view family, const std::vector<std::size_t> & params, std::size_t count)
{
    if (params.size() != count)
        throw GraphError("family " + std::string(family) + " takes " + std::to_string(count) + " parameter(s), got " +
                         std::to_string(params.size()));
    return params;
}

} // namespace

std::string canonical_key(const Graph & g) { return canonical_ordering(g).first; }

Graph canonical_form(const Graph & g)
{
    auto order = canonical_ordering(g).second;
    std::vector<Vertex> new_id(g.order());
    for (Vertex i = 0; i < order.size(); ++i)
        new_id[order[i]] = i;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const auto & e : g.edges())
        pairs.emplace_back(new_id[e.u], new_id[e.v]);
    return Graph(g.order(), pairs);
}

std::vector<Graph> all_connected_up_to(std::size_t max_order)
{
    if (max_order == 0 || max_order > 7)
        throw GraphError("all_connected_up_to supports orders 1..7");

    // Every connected graph has a vertex whose removal leaves it connected, so
    // extending each connected graph on n-1 vertices by one vertex reaches all
    // connected graphs on n vertices.
    std::vector<Graph> out{Graph(1, {})};
    std::vector<Graph> layer = out;
    for (std::size_t n = 2; n <= max_order; ++n) {
        std::map<std::tuple<std::size_t, std::string>, Graph> seen;
        for (const auto & base : layer) {
            std::vector<std::pair<Vertex, Vertex>> pairs;
            for (const auto & e : base.edges())
                pairs.emplace_back(e.u, e.v);
            for (std::uint32_t mask = 1; mask < (1U << (n - 1)); ++mask) {
                auto extended = pairs;
                for (Vertex x = 0; x + 1 < n; ++x)
                    if ((mask >> x) & 1U)
                        extended.emplace_back(x, static_cast<Vertex>(n - 1));
                Graph candidate(n, extended);
                auto [key, order] = canonical_ordering(candidate);
                auto slot = std::make_tuple(candidate.size(), key);
                if (!seen.contains(slot))
                    seen.emplace(slot, canonical_form(candidate));
            }
        }
        layer.clear();
        for (auto & [slot, graph] : seen)
            layer.push_back(std::move(graph));
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::vector<Graph> generate(std::string_view family, const std::vector<std::size_t> & params)
{
    if (family == "path")
        return {path_graph(expect_params(family, params, 1)[0])};
    if (family == "cycle")
        return {cycle_graph(expect_params(family, params, 1)[0])};
    if (family == "complete")
        return {complete_graph(expect_params(family, params, 1)[0])};
    if (family == "complete_bipartite") {
        auto p = expect_params(family, params, 2);
        return {complete_bipartite_graph(p[0], p[1])};
    }
    if (family == "star")
        return {star_graph(expect_params(family, params, 1)[0])};
    if (family == "petersen") {
        expect_params(family, params, 0);
        return {petersen_graph()};
    }
    if (family == "all_connected_up_to")
        return all_connected_up_to(expect_params(family, params, 1)[0]);
    throw GraphError("unknown graph family '" + std::string(family) + "'");
}

} // namespace chroma
