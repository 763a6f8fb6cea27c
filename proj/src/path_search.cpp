#include "path_search.hpp"

#include <deque>
#include <limits>

namespace chroma {

namespace detail {

namespace {

std::optional<Path> first_dfs_path(const Graph & g, std::span<const Color> colors, Vertex u, Vertex v, Pattern p)
{
    std::optional<Path> found;
    PatternDfs(g, colors, p).run(u, v, [&](const Path & path) {
        found = path;
        return false;
    });
    return found;
}

std::optional<Path> monochromatic_path(const Graph & g, std::span<const Color> colors, Vertex u, Vertex v)
{
    constexpr auto none = std::numeric_limits<EdgeIndex>::max();
    for (const auto & start : g.incident(u)) {
        const Color c = colors[start.edge];
        std::vector<EdgeIndex> via(g.order(), none);
        std::vector<bool> seen(g.order(), false);
        std::deque<Vertex> queue{u};
        seen[u] = true;
        while (!queue.empty() && !seen[v]) {
            auto x = queue.front();
            queue.pop_front();
            for (const auto & inc : g.incident(x))
                if (colors[inc.edge] == c && !seen[inc.neighbour]) {
                    seen[inc.neighbour] = true;
                    via[inc.neighbour] = inc.edge;
                    queue.push_back(inc.neighbour);
                }
        }
        if (!seen[v])
            continue;
        std::vector<Vertex> rev{v};
        for (auto x = v; x != u;) {
            x = g.edges()[via[x]].other(x);
            rev.push_back(x);
        }
        std::vector<Vertex> seq(rev.rbegin(), rev.rend());
        return make_path(g, seq);
    }
    return std::nullopt;
}

// Shortest properly colored walk by BFS over (vertex, color of the edge used
// to enter it). Returns the walk's vertex sequence; it may revisit vertices.
std::optional<std::vector<Vertex>> proper_walk(const Graph & g, std::span<const Color> colors, Vertex u, Vertex v)
{
    Color top = 0;
    for (auto c : colors)
        top = std::max(top, c);
    const std::size_t slots = static_cast<std::size_t>(top) + 2; // slot 0: no incoming edge
    auto state = [&](Vertex x, std::size_t slot) { return static_cast<std::size_t>(x) * slots + slot; };
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> parent(g.order() * slots, unset);
    std::deque<std::size_t> queue{state(u, 0)};
    parent[state(u, 0)] = state(u, 0);
    std::optional<std::size_t> goal;
    while (!queue.empty() && !goal) {
        auto s = queue.front();
        queue.pop_front();
        auto x = static_cast<Vertex>(s / slots);
        auto slot = s % slots;
        for (const auto & inc : g.incident(x)) {
            auto c = colors[inc.edge];
            if (slot != 0 && c + 1 == slot)
                continue;
            auto t = state(inc.neighbour, c + 1);
            if (parent[t] != unset)
                continue;
            parent[t] = s;
            if (inc.neighbour == v) {
                goal = t;
                break;
            }
            queue.push_back(t);
        }
    }
    if (!goal)
        return std::nullopt;
    std::vector<Vertex> rev;
    for (auto s = *goal;; s = parent[s]) {
        rev.push_back(static_cast<Vertex>(s / slots));
        if (parent[s] == s)
            break;
    }
    return std::vector<Vertex>(rev.rbegin(), rev.rend());
}

std::optional<Path> shortest_path(const Graph & g, Vertex u, Vertex v)
{
    auto dist = distances_from(g, v);
    if (!dist[u])
        return std::nullopt;
    std::vector<Vertex> seq{u};
    for (auto x = u; x != v;) {
        for (const auto & inc : g.incident(x))
            if (dist[inc.neighbour] && *dist[inc.neighbour] + 1 == *dist[x]) {
                x = inc.neighbour;
                break;
            }
        seq.push_back(x);
    }
    return make_path(g, seq);
}

} // namespace

std::optional<Path> find_pattern_path(const Graph & g, std::span<const Color> colors, Vertex u, Vertex v, Pattern p)
{
    g.require_vertex(u);
    g.require_vertex(v);
    if (u == v)
        return Path{{u}, {}};

    switch (p) {
    case Pattern::monochromatic:
        return monochromatic_path(g, colors, u, v);
    case Pattern::proper: {
        // No proper walk means no proper path; a walk that happens to be
        // simple is already a witness.
        auto walk = proper_walk(g, colors, u, v);
        if (!walk)
            return std::nullopt;
        std::vector<bool> seen(g.order(), false);
        bool simple = true;
        for (auto x : *walk) {
            simple = simple && !seen[x];
            seen[x] = true;
        }
        if (simple)
            return make_path(g, *walk);
        return first_dfs_path(g, colors, u, v, p);
    }
    case Pattern::conflict_free: {
        auto sp = shortest_path(g, u, v);
        if (!sp)
            return std::nullopt;
        std::vector<Color> seq;
        for (auto e : sp->edges)
            seq.push_back(colors[e]);
        if (colors_satisfy(seq, p))
            return sp;
        return first_dfs_path(g, colors, u, v, p);
    }
    case Pattern::rainbow:
        break;
    }
    return first_dfs_path(g, colors, u, v, p);
}

} // namespace detail

bool for_each_pattern_path(const Graph & g, std::span<const Color> colors, Vertex u, Vertex v, Pattern p,
                           const PathSearchMask * mask, const std::function<bool(const Path &)> & visit)
{
    g.require_vertex(u);
    g.require_vertex(v);
    if (colors.size() != g.size())
        throw ColoringError("coloring has " + std::to_string(colors.size()) + " entries for " + std::to_string(g.size()) +
                            " edges");
    return detail::PatternDfs(g, colors, p, mask).run(u, v, visit);
}

std::optional<Path> exists_pattern_path(const Graph & g, const EdgeColoring & coloring, Vertex u, Vertex v, Pattern p)
{
    coloring.require_fits(g);
    return detail::find_pattern_path(g, coloring.colors(), u, v, p);
}

} // namespace chroma
