#include "checkers.hpp"
#include "path_search.hpp"

#include <chroma/local.hpp>
#include <chroma/verifiers.hpp>

#include <algorithm>
#include <set>

namespace chroma {

namespace detail {

void require_connected(const Graph & g)
{
    if (!is_connected(g))
        throw GraphError("graph must be connected: connection and disconnection numbers are only defined for "
                         "connected graphs");
}

ConnectionChecker::ConnectionChecker(const Graph & g, Pattern p, std::size_t k, DisjointMode mode) :
    g_(g), pattern_(p), k_(k), mode_(mode)
{
    if (k == 0)
        throw std::invalid_argument("k must be at least 1");
    require_connected(g);
    if (k > 1 && g.order() > 1 && connectivity(g, mode) < k)
        throw GraphError("graph is not " + std::to_string(k) + "-" + std::string(to_string(mode)) +
                         "-connected, so no coloring can give it " + std::to_string(k) + " disjoint pattern paths per pair");

    std::vector<std::tuple<std::size_t, Vertex, Vertex>> keyed;
    for (Vertex u = 0; u < g.order(); ++u) {
        auto dist = distances_from(g, u);
        for (Vertex v = u + 1; v < g.order(); ++v)
            keyed.emplace_back(*dist[v], u, v);
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto & a, const auto & b) { return std::get<0>(a) > std::get<0>(b); });
    for (const auto & [d, u, v] : keyed)
        probe_order_.emplace_back(u, v);
}

std::optional<std::vector<Path>> ConnectionChecker::family(std::span<const Color> colors, Vertex u, Vertex v) const
{
    if (k_ == 1) {
        auto p = find_pattern_path(g_, colors, u, v, pattern_);
        if (!p)
            return std::nullopt;
        return std::vector<Path>{std::move(*p)};
    }

    PathSearchMask mask{std::vector<bool>(g_.size(), false), std::vector<bool>(g_.order(), false)};
    std::vector<Path> chosen;
    auto block = [&](const Path & path, bool on) {
        for (auto e : path.edges)
            mask.blocked_edges[e] = on;
        if (mode_ == DisjointMode::vertex)
            for (std::size_t i = 1; i + 1 < path.vertices.size(); ++i)
                mask.blocked_vertices[path.vertices[i]] = on;
    };
    // Disjoint paths leave u through different edges, so taking them in
    // increasing order of first edge visits each family once.
    auto search = [&](auto & self) -> bool {
        if (chosen.size() == k_)
            return true;
        bool found = false;
        PatternDfs(g_, colors, pattern_, &mask).run(u, v, [&](const Path & path) {
            if (!chosen.empty() && path.edges.front() <= chosen.back().edges.front())
                return true;
            block(path, true);
            chosen.push_back(path);
            if (self(self)) {
                found = true;
                return false;
            }
            chosen.pop_back();
            block(path, false);
            return true;
        });
        return found;
    };
    if (!search(search))
        return std::nullopt;
    return chosen;
}

bool ConnectionChecker::holds(std::span<const Color> colors) const
{
    return std::all_of(probe_order_.begin(), probe_order_.end(),
                       [&](const auto & uv) { return family(colors, uv.first, uv.second).has_value(); });
}

std::optional<Certificate> ConnectionChecker::certify(std::span<const Color> colors) const
{
    Certificate cert;
    cert.kind = k_ == 1 ? CertificateKind::connection : CertificateKind::k_connection;
    cert.pattern = pattern_;
    cert.k = k_;
    cert.mode = mode_;
    for (Vertex u = 0; u < g_.order(); ++u)
        for (Vertex v = u + 1; v < g_.order(); ++v) {
            auto paths = family(colors, u, v);
            if (!paths)
                return std::nullopt;
            cert.pairs.push_back(PairWitness{u, v, std::move(*paths), {}});
        }
    return cert;
}

DisconnectionChecker::DisconnectionChecker(const Graph & g, Pattern p) : g_(g), pattern_(p)
{
    if (p == Pattern::conflict_free)
        throw ColoringError("conflict-free cuts are not defined; use rainbow, proper or monochromatic");
    require_connected(g);
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) {
            PairCuts pc{u, v, {}};
            UvCutEnumerator walk(g, u, v);
            while (auto next = walk.next()) {
                Cut cut;
                for (auto x : next->side.members())
                    cut.side.push_back(static_cast<Vertex>(x));
                for (auto e : next->cut.members())
                    cut.edges.push_back(static_cast<EdgeIndex>(e));
                if (p == Pattern::proper)
                    for (std::size_t i = 0; i < cut.edges.size(); ++i)
                        for (std::size_t j = i + 1; j < cut.edges.size(); ++j)
                            if (g.edge(cut.edges[i]).shares_endpoint(g.edge(cut.edges[j])))
                                cut.touching.emplace_back(cut.edges[i], cut.edges[j]);
                pc.cuts.push_back(std::move(cut));
            }
            std::stable_sort(pc.cuts.begin(), pc.cuts.end(),
                             [](const Cut & a, const Cut & b) { return a.edges.size() < b.edges.size(); });
            pairs_.push_back(std::move(pc));
        }
}

bool DisconnectionChecker::satisfied(const Cut & cut, std::span<const Color> colors) const
{
    switch (pattern_) {
    case Pattern::rainbow:
        for (std::size_t i = 0; i < cut.edges.size(); ++i)
            for (std::size_t j = i + 1; j < cut.edges.size(); ++j)
                if (colors[cut.edges[i]] == colors[cut.edges[j]])
                    return false;
        return true;
    case Pattern::monochromatic:
        return std::all_of(cut.edges.begin(), cut.edges.end(),
                           [&](EdgeIndex e) { return colors[e] == colors[cut.edges.front()]; });
    case Pattern::proper:
        return std::none_of(cut.touching.begin(), cut.touching.end(),
                            [&](const auto & ef) { return colors[ef.first] == colors[ef.second]; });
    case Pattern::conflict_free:
        break;
    }
    return false;
}

auto DisconnectionChecker::witness(const PairCuts & pc, std::span<const Color> colors) const -> const Cut *
{
    for (const auto & cut : pc.cuts)
        if (satisfied(cut, colors))
            return &cut;
    return nullptr;
}

bool DisconnectionChecker::holds(std::span<const Color> colors) const
{
    return std::all_of(pairs_.begin(), pairs_.end(), [&](const PairCuts & pc) { return witness(pc, colors) != nullptr; });
}

std::optional<Certificate> DisconnectionChecker::certify(std::span<const Color> colors) const
{
    Certificate cert;
    cert.kind = CertificateKind::disconnection;
    cert.pattern = pattern_;
    for (const auto & pc : pairs_) {
        const auto * cut = witness(pc, colors);
        if (!cut)
            return std::nullopt;
        cert.pairs.push_back(PairWitness{pc.u, pc.v, {}, cut->side});
    }
    return cert;
}

} // namespace detail

std::optional<Certificate> is_pattern_connected(const Graph & g, const EdgeColoring & coloring, Pattern p)
{
    coloring.require_fits(g);
    return detail::ConnectionChecker(g, p, 1, DisjointMode::edge).certify(coloring.colors());
}

std::optional<Certificate> is_pattern_k_connected(const Graph & g, const EdgeColoring & coloring, Pattern p,
                                                  std::size_t k, DisjointMode mode)
{
    coloring.require_fits(g);
    auto cert = detail::ConnectionChecker(g, p, k, mode).certify(coloring.colors());
    if (cert)
        cert->kind = CertificateKind::k_connection;
    return cert;
}

std::optional<Certificate> is_pattern_disconnected(const Graph & g, const EdgeColoring & coloring, Pattern p)
{
    coloring.require_fits(g);
    return detail::DisconnectionChecker(g, p).certify(coloring.colors());
}

std::optional<Certificate> is_proper_rainbow_connected(const Graph & g, const EdgeColoring & coloring)
{
    coloring.require_fits(g);
    detail::require_connected(g);
    if (!is_proper_edge_coloring(g, coloring))
        return std::nullopt;
    auto cert = is_pattern_connected(g, coloring, Pattern::rainbow);
    if (cert)
        cert->proper_coloring = true;
    return cert;
}

bool cut_satisfies(const Graph & g, std::span<const Color> colors, const EdgeSet & cut, Pattern p)
{
    if (colors.size() != g.size() || cut.universe() != g.size())
        throw ColoringError("cut or coloring does not match the graph");
    auto edges = cut.members();
    switch (p) {
    case Pattern::rainbow: {
        std::set<Color> seen;
        for (auto e : edges)
            if (!seen.insert(colors[e]).second)
                return false;
        return true;
    }
    case Pattern::monochromatic:
        return std::all_of(edges.begin(), edges.end(), [&](std::size_t e) { return colors[e] == colors[edges.front()]; });
    case Pattern::proper:
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = i + 1; j < edges.size(); ++j)
                if (colors[edges[i]] == colors[edges[j]] &&
                    g.edge(static_cast<EdgeIndex>(edges[i])).shares_endpoint(g.edge(static_cast<EdgeIndex>(edges[j]))))
                    return false;
        return true;
    case Pattern::conflict_free:
        break;
    }
    throw ColoringError("conflict-free cuts are not defined");
}

namespace {

bool path_ok(const Graph & g, std::span<const Color> colors, const Path & p, Vertex u, Vertex v, Pattern pattern)
{
    if (!is_simple_path(g, p) || p.vertices.front() != u || p.vertices.back() != v)
        return false;
    std::vector<Color> seq;
    for (auto e : p.edges)
        seq.push_back(colors[e]);
    return colors_satisfy(seq, pattern);
}

bool family_disjoint(const std::vector<Path> & paths, DisjointMode mode, std::size_t n, std::size_t m)
{
    std::vector<bool> used_edge(m, false);
    std::vector<bool> used_vertex(n, false);
    for (const auto & p : paths) {
        for (auto e : p.edges) {
            if (used_edge[e])
                return false;
            used_edge[e] = true;
        }
        if (mode == DisjointMode::vertex)
            for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
                if (used_vertex[p.vertices[i]])
                    return false;
                used_vertex[p.vertices[i]] = true;
            }
    }
    return true;
}

bool check_certificate(const Graph & g, const EdgeColoring & coloring, const Certificate & cert)
{
    if (coloring.size() != g.size())
        return false;
    const auto colors = coloring.colors();
    const auto n = g.order();

    const bool connection_kind = cert.kind != CertificateKind::disconnection;
    if (cert.proper_coloring && (cert.kind != CertificateKind::connection || cert.pattern != Pattern::rainbow ||
                                 !is_proper_edge_coloring(g, colors)))
        return false;
    if (cert.kind == CertificateKind::connection && cert.k != 1)
        return false;
    if (cert.kind == CertificateKind::k_connection && cert.k == 0)
        return false;
    if (cert.kind == CertificateKind::disconnection && cert.pattern == Pattern::conflict_free)
        return false;

    std::set<std::pair<Vertex, Vertex>> covered;
    for (const auto & w : cert.pairs) {
        if (w.u >= n || w.v >= n || w.u >= w.v)
            return false;
        if (!covered.emplace(w.u, w.v).second)
            return false;

        if (connection_kind) {
            if (!w.side.empty() || w.paths.size() != cert.k)
                return false;
            for (const auto & p : w.paths)
                if (!path_ok(g, colors, p, w.u, w.v, cert.pattern))
                    return false;
            if (cert.k > 1 && !family_disjoint(w.paths, cert.mode, n, g.size()))
                return false;
        } else {
            if (!w.paths.empty())
                return false;
            VertexSet side(n);
            for (auto x : w.side) {
                if (x >= n || side.contains(x))
                    return false;
                side.insert(x);
            }
            if (!side.contains(w.u) || side.contains(w.v))
                return false;
            if (!cut_satisfies(g, colors, crossing_cut(g, side), cert.pattern))
                return false;
        }
    }
    return covered.size() == n * (n - 1) / 2;
}

} // namespace

bool verify_certificate(const Graph & g, const EdgeColoring & coloring, const Certificate & cert) noexcept
{
    try {
        return check_certificate(g, coloring, cert);
    } catch (...) {
        return false;
    }
}

} // namespace chroma
