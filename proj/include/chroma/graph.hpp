#pragma once

#include <chroma/index_set.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chroma {

using Vertex = std::uint32_t;
using EdgeIndex = std::uint32_t;

/// Raised for malformed graph construction requests and violated
/// preconditions on graph arguments.
class GraphError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

struct Edge
{
    Vertex u;
    Vertex v;

    [[nodiscard]] bool touches(Vertex x) const noexcept { return u == x || v == x; }
    [[nodiscard]] Vertex other(Vertex x) const noexcept { return x == u ? v : u; }
    [[nodiscard]] bool shares_endpoint(const Edge & e) const noexcept { return touches(e.u) || touches(e.v); }

    friend auto operator<=>(const Edge &, const Edge &) = default;
};

struct Incidence
{
    Vertex neighbour;
    EdgeIndex edge;
};

/// Simple undirected graph on vertices 0..n-1. Edges are stored with u < v and
/// sorted lexicographically, so an edge's index is a function of the edge set
/// alone. Immutable once built.
class Graph
{
  public:
    Graph() = default;

    /// Throws GraphError on an out-of-range endpoint, a self-loop or a
    /// repeated pair (in either orientation).
    Graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs);
    Graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs);

    [[nodiscard]] std::size_t order() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return edges_.size(); }

    [[nodiscard]] const std::vector<Edge> & edges() const noexcept { return edges_; }
    [[nodiscard]] const Edge & edge(EdgeIndex e) const;
    [[nodiscard]] std::span<const Incidence> incident(Vertex v) const;

    [[nodiscard]] std::size_t degree(Vertex v) const { return incident(v).size(); }
    [[nodiscard]] std::size_t max_degree() const noexcept;

    [[nodiscard]] std::optional<EdgeIndex> edge_between(Vertex u, Vertex v) const;
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const { return edge_between(u, v).has_value(); }

    void require_vertex(Vertex v) const;

    friend bool operator==(const Graph & a, const Graph & b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

  private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
};

Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs);

/// A simple path v_0 .. v_l together with the indices of the l edges it uses.
struct Path
{
    std::vector<Vertex> vertices;
    std::vector<EdgeIndex> edges;

    [[nodiscard]] std::size_t length() const noexcept { return edges.size(); }
    friend bool operator==(const Path &, const Path &) = default;
};

/// Builds a Path from a vertex sequence; throws GraphError unless the sequence
/// is a simple path of g.
Path make_path(const Graph & g, std::span<const Vertex> vertices);

/// True iff the path's vertex sequence is a simple path in g and its edge list
/// matches the consecutive vertex pairs.
bool is_simple_path(const Graph & g, const Path & p);

bool is_connected(const Graph & g);

/// BFS distances from source; unreachable vertices get std::nullopt.
std::vector<std::optional<std::size_t>> distances_from(const Graph & g, Vertex source);

/// Throws GraphError for a disconnected graph.
std::size_t diameter(const Graph & g);

enum class DisjointMode
{
    edge,
    vertex
};

struct DisjointPaths
{
    std::size_t count = 0;
    std::vector<Path> paths;
};

/// Maximum family of pairwise edge-disjoint (edge mode) or internally
/// vertex-disjoint (vertex mode) u-v paths, by unit-capacity augmenting paths.
/// In vertex mode a direct u-v edge counts as one path.
DisjointPaths max_disjoint_paths(const Graph & g, Vertex u, Vertex v, DisjointMode mode);

/// Minimum over all pairs of the Menger number; 0 for graphs with fewer than
/// two vertices.
std::size_t connectivity(const Graph & g, DisjointMode mode);

/// Edges with exactly one endpoint in side. Throws if side is empty or full.
EdgeSet crossing_cut(const Graph & g, const VertexSet & side);

struct UvCut
{
    VertexSet side;
    EdgeSet cut;
};

/// Lazily walks every vertex set S with u in S and v not in S (2^(n-2) of
/// them) and yields S together with its crossing cut. Limited to n <= 64.
class UvCutEnumerator
{
  public:
    UvCutEnumerator(const Graph & g, Vertex u, Vertex v);

    std::optional<UvCut> next();

    [[nodiscard]] std::uint64_t total() const noexcept { return std::uint64_t{1} << others_.size(); }

  private:
    const Graph * g_;
    Vertex u_;
    std::vector<Vertex> others_;
    std::uint64_t cursor_ = 0;
    bool done_ = false;
};

Graph line_graph(const Graph & g);
Graph delete_edge(const Graph & g, EdgeIndex e);

/// Merges the endpoints of e into the smaller one, drops the loop, merges
/// parallel edges, and shifts higher vertex ids down by one.
Graph contract_edge(const Graph & g, EdgeIndex e);

/// Subgraph induced by keep; kept vertices are renumbered in ascending order.
Graph induced_subgraph(const Graph & g, std::span<const Vertex> keep);

std::string write_dot(const Graph & g);

} // namespace chroma
