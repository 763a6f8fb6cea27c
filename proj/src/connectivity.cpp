#include <chroma/graph.hpp>

#include <algorithm>
#include <deque>
#include <limits>

namespace chroma {

bool is_connected(const Graph & g)
{
    if (g.order() <= 1)
        return true;
    auto dist = distances_from(g, 0);
    return std::all_of(dist.begin(), dist.end(), [](const auto & d) { return d.has_value(); });
}

std::vector<std::optional<std::size_t>> distances_from(const Graph & g, Vertex source)
{
    g.require_vertex(source);
    std::vector<std::optional<std::size_t>> dist(g.order());
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        auto x = queue.front();
        queue.pop_front();
        for (const auto & inc : g.incident(x))
            if (!dist[inc.neighbour]) {
                dist[inc.neighbour] = *dist[x] + 1;
                queue.push_back(inc.neighbour);
            }
    }
    return dist;
}

std::size_t diameter(const Graph & g)
{
    std::size_t best = 0;
    for (Vertex s = 0; s < g.order(); ++s)
        for (const auto & d : distances_from(g, s)) {
            if (!d)
                throw GraphError("diameter is undefined for a disconnected graph");
            best = std::max(best, *d);
        }
    return best;
}

namespace {

// Residual network for unit-capacity max flow.
class FlowNetwork
{
  public:
    explicit FlowNetwork(std::size_t nodes) : arcs_(nodes) {}

    void add_arc(std::size_t from, std::size_t to, int capacity)
    {
        arcs_[from].push_back({to, capacity, capacity, arcs_[to].size()});
        arcs_[to].push_back({from, 0, 0, arcs_[from].size() - 1});
    }

    std::size_t max_flow(std::size_t source, std::size_t sink, std::size_t limit)
    {
        std::size_t flow = 0;
        while (flow < limit && augment(source, sink))
            ++flow;
        return flow;
    }

    // Pops one unit of flow from source to sink along arcs carrying flow and
    // returns the node sequence.
    std::vector<std::size_t> take_path(std::size_t source, std::size_t sink)
    {
        std::vector<std::size_t> nodes{source};
        auto x = source;
        while (x != sink) {
            auto it = std::find_if(arcs_[x].begin(), arcs_[x].end(), [](const Arc & a) { return a.original > 0 && a.flow() > 0; });
            if (it == arcs_[x].end())
                break;
            ++it->capacity;
            --arcs_[it->to][it->reverse].capacity;
            x = it->to;
            nodes.push_back(x);
        }
        return nodes;
    }

    // Cancels flow running both ways across the antiparallel pair of original
    // arcs (a, b) and (b, a).
    void cancel_opposing(std::size_t a, std::size_t b)
    {
        auto find = [&](std::size_t from, std::size_t to) -> Arc * {
            for (auto & arc : arcs_[from])
                if (arc.to == to && arc.original > 0)
                    return &arc;
            return nullptr;
        };
        auto * ab = find(a, b);
        auto * ba = find(b, a);
        if (ab && ba && ab->flow() > 0 && ba->flow() > 0) {
            for (Arc * arc : {ab, ba}) {
                ++arc->capacity;
                --arcs_[arc->to][arc->reverse].capacity;
            }
        }
    }

  private:
    struct Arc
    {
        std::size_t to;
        int capacity;
        int original;
        std::size_t reverse;

        [[nodiscard]] int flow() const noexcept { return original - capacity; }
    };

    bool augment(std::size_t source, std::size_t sink)
    {
        std::vector<std::optional<std::pair<std::size_t, std::size_t>>> parent(arcs_.size());
        std::vector<bool> seen(arcs_.size(), false);
        std::deque<std::size_t> queue{source};
        seen[source] = true;
        while (!queue.empty() && !seen[sink]) {
            auto x = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < arcs_[x].size(); ++i) {
                const auto & arc = arcs_[x][i];
                if (arc.capacity > 0 && !seen[arc.to]) {
                    seen[arc.to] = true;
                    parent[arc.to] = {x, i};
                    queue.push_back(arc.to);
                }
            }
        }
        if (!seen[sink])
            return false;
        for (auto x = sink; x != source;) {
            auto [from, i] = *parent[x];
            auto & arc = arcs_[from][i];
            --arc.capacity;
            ++arcs_[arc.to][arc.reverse].capacity;
            x = from;
        }
        return true;
    }

    std::vector<std::vector<Arc>> arcs_;
};

// Removes closed sub-walks so that every vertex appears once.
std::vector<Vertex> shortcut(const std::vector<Vertex> & walk)
{
    std::vector<Vertex> out;
    for (auto x : walk) {
        auto it = std::find(out.begin(), out.end(), x);
        if (it != out.end())
            out.erase(it + 1, out.end());
        else
            out.push_back(x);
    }
    return out;
}

} // namespace

DisjointPaths max_disjoint_paths(const Graph & g, Vertex u, Vertex v, DisjointMode mode)
{
    g.require_vertex(u);
    g.require_vertex(v);
    if (u == v)
        throw GraphError("disjoint paths need two distinct endpoints");

    const auto n = g.order();
    const bool split = mode == DisjointMode::vertex;
    // Vertex mode: node x is x's entry, node x + n its exit.
    FlowNetwork net(split ? 2 * n : n);
    auto entry = [](Vertex x) -> std::size_t { return x; };
    auto out_node = [&](Vertex x) -> std::size_t { return split ? x + n : x; };
    if (split)
        for (Vertex x = 0; x < n; ++x)
            net.add_arc(entry(x), out_node(x), (x == u || x == v) ? static_cast<int>(n) : 1);
    for (const auto & e : g.edges()) {
        net.add_arc(out_node(e.u), entry(e.v), 1);
        net.add_arc(out_node(e.v), entry(e.u), 1);
    }

    DisjointPaths result;
    result.count = net.max_flow(entry(u), out_node(v), std::numeric_limits<std::size_t>::max());
    if (!split)
        for (const auto & e : g.edges())
            net.cancel_opposing(e.u, e.v);

    for (std::size_t i = 0; i < result.count; ++i) {
        auto nodes = net.take_path(entry(u), out_node(v));
        std::vector<Vertex> walk;
        for (auto node : nodes) {
            auto x = static_cast<Vertex>(node >= n ? node - n : node);
            if (walk.empty() || walk.back() != x)
                walk.push_back(x);
        }
        result.paths.push_back(make_path(g, shortcut(walk)));
    }
    return result;
}

std::size_t connectivity(const Graph & g, DisjointMode mode)
{
    if (g.order() < 2)
        return 0;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b = a + 1; b < g.order(); ++b)
            best = std::min(best, max_disjoint_paths(g, a, b, mode).count);
    return best;
}

EdgeSet crossing_cut(const Graph & g, const VertexSet & side)
{
    if (side.universe() != g.order())
        throw GraphError("vertex set universe does not match the graph order");
    auto k = side.count();
    if (k == 0 || k == g.order())
        throw GraphError("a crossing cut needs a nonempty proper vertex subset");
    EdgeSet cut(g.size());
    for (EdgeIndex i = 0; i < g.size(); ++i) {
        const auto & e = g.edges()[i];
        if (side.contains(e.u) != side.contains(e.v))
            cut.insert(i);
    }
    return cut;
}

UvCutEnumerator::UvCutEnumerator(const Graph & g, Vertex u, Vertex v) : g_(&g), u_(u)
{
    g.require_vertex(u);
    g.require_vertex(v);
    if (u == v)
        throw GraphError("a u-v cut needs two distinct vertices");
    if (g.order() > 64)
        throw GraphError("cut enumeration is limited to 64 vertices");
    for (Vertex x = 0; x < g.order(); ++x)
        if (x != u && x != v)
            others_.push_back(x);
}

std::optional<UvCut> UvCutEnumerator::next()
{
    if (done_)
        return std::nullopt;
    VertexSet side(g_->order());
    side.insert(u_);
    for (std::size_t i = 0; i < others_.size(); ++i)
        if ((cursor_ >> i) & 1U)
            side.insert(others_[i]);
    ++cursor_;
    if (cursor_ == total())
        done_ = true;
    auto cut = crossing_cut(*g_, side);
    return UvCut{std::move(side), std::move(cut)};
}

} // namespace chroma
