#include <chroma/graph.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace chroma {

namespace {

std::vector<Edge> normalise(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs)
{
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [a, b] : pairs) {
        if (a >= n || b >= n)
            throw GraphError("edge (" + std::to_string(a) + "," + std::to_string(b) + ") has an endpoint outside 0.." +
                             std::to_string(n == 0 ? 0 : n - 1));
        if (a == b)
            throw GraphError("self-loop at vertex " + std::to_string(a));
        edges.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw GraphError("duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
    return edges;
}

// Simplifies a multigraph edge list: drops loops and repeated pairs.
Graph simple_from(std::size_t n, std::vector<std::pair<Vertex, Vertex>> pairs)
{
    for (auto & [a, b] : pairs)
        if (a > b)
            std::swap(a, b);
    std::erase_if(pairs, [](const auto & p) { return p.first == p.second; });
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return Graph(n, pairs);
}

} // namespace

Graph::Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) :
    n_(n), edges_(normalise(n, pairs)), adjacency_(n)
{
    for (EdgeIndex i = 0; i < edges_.size(); ++i) {
        adjacency_[edges_[i].u].push_back({edges_[i].v, i});
        adjacency_[edges_[i].v].push_back({edges_[i].u, i});
    }
    for (auto & list : adjacency_)
        std::sort(list.begin(), list.end(), [](const Incidence & a, const Incidence & b) { return a.neighbour < b.neighbour; });
}

Graph::Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) :
    Graph(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()))
{
}

const Edge & Graph::edge(EdgeIndex e) const
{
    if (e >= edges_.size())
        throw GraphError("edge index " + std::to_string(e) + " out of range");
    return edges_[e];
}

std::span<const Incidence> Graph::incident(Vertex v) const
{
    require_vertex(v);
    return adjacency_[v];
}

std::size_t Graph::max_degree() const noexcept
{
    std::size_t d = 0;
    for (const auto & list : adjacency_)
        d = std::max(d, list.size());
    return d;
}

std::optional<EdgeIndex> Graph::edge_between(Vertex u, Vertex v) const
{
    if (u >= n_ || v >= n_)
        return std::nullopt;
    for (const auto & inc : adjacency_[u])
        if (inc.neighbour == v)
            return inc.edge;
    return std::nullopt;
}

void Graph::require_vertex(Vertex v) const
{
    if (v >= n_)
        throw GraphError("vertex " + std::to_string(v) + " out of range for a graph on " + std::to_string(n_) + " vertices");
}

Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) { return Graph(n, pairs); }

Path make_path(const Graph & g, std::span<const Vertex> vertices)
{
    if (vertices.empty())
        throw GraphError("a path needs at least one vertex");
    Path p;
    p.vertices.assign(vertices.begin(), vertices.end());
    std::set<Vertex> seen;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        g.require_vertex(vertices[i]);
        if (!seen.insert(vertices[i]).second)
            throw GraphError("path repeats vertex " + std::to_string(vertices[i]));
        if (i > 0) {
            auto e = g.edge_between(vertices[i - 1], vertices[i]);
            if (!e)
                throw GraphError("path step " + std::to_string(vertices[i - 1]) + "-" + std::to_string(vertices[i]) +
                                 " is not an edge");
            p.edges.push_back(*e);
        }
    }
    return p;
}

bool is_simple_path(const Graph & g, const Path & p)
{
    if (p.vertices.empty() || p.edges.size() + 1 != p.vertices.size())
        return false;
    std::vector<bool> seen(g.order(), false);
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        auto x = p.vertices[i];
        if (x >= g.order() || seen[x])
            return false;
        seen[x] = true;
        if (i > 0) {
            auto e = g.edge_between(p.vertices[i - 1], x);
            if (!e || *e != p.edges[i - 1])
                return false;
        }
    }
    return true;
}

Graph line_graph(const Graph & g)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v = 0; v < g.order(); ++v) {
        auto inc = g.incident(v);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                pairs.emplace_back(inc[i].edge, inc[j].edge);
    }
    // In a simple graph two edges share at most one endpoint, so no pair repeats.
    return Graph(g.size(), pairs);
}

Graph delete_edge(const Graph & g, EdgeIndex e)
{
    (void)g.edge(e);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(g.size() - 1);
    for (EdgeIndex i = 0; i < g.size(); ++i)
        if (i != e)
            pairs.emplace_back(g.edges()[i].u, g.edges()[i].v);
    return Graph(g.order(), pairs);
}

Graph contract_edge(const Graph & g, EdgeIndex e)
{
    const auto [keep, gone] = g.edge(e);
    auto relabel = [keep = keep, gone = gone](Vertex x) -> Vertex {
        if (x == gone)
            return keep;
        return x > gone ? x - 1 : x;
    };
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(g.size());
    for (const auto & edge : g.edges())
        pairs.emplace_back(relabel(edge.u), relabel(edge.v));
    return simple_from(g.order() - 1, std::move(pairs));
}

Graph induced_subgraph(const Graph & g, std::span<const Vertex> keep)
{
    std::vector<Vertex> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::optional<Vertex>> index(g.order());
    for (Vertex i = 0; i < sorted.size(); ++i) {
        g.require_vertex(sorted[i]);
        index[sorted[i]] = i;
    }
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const auto & edge : g.edges())
        if (index[edge.u] && index[edge.v])
            pairs.emplace_back(*index[edge.u], *index[edge.v]);
    return Graph(sorted.size(), pairs);
}

std::string write_dot(const Graph & g)
{
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.order(); ++v)
        out << "  " << v << ";\n";
    for (const auto & e : g.edges())
        out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace chroma
