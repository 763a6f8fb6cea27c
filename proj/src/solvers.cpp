#include "checkers.hpp"

#include <chroma/graph6.hpp>
#include <chroma/local.hpp>
#include <chroma/solvers.hpp>

#include <algorithm>

namespace chroma {

namespace {

class ConnectionProperty final : public ColoringProperty
{
  public:
    ConnectionProperty(const Graph & g, Pattern p, std::size_t k, DisjointMode mode) :
        g_(g), pattern_(p), k_(k), mode_(mode), checker_(g, p, k, mode)
    {
    }

    [[nodiscard]] std::string name() const override
    {
        auto base = std::string(to_string(pattern_)) + " connection";
        return k_ == 1 ? base : base + " (k=" + std::to_string(k_) + ", " + std::string(to_string(mode_)) + ")";
    }
    [[nodiscard]] Objective objective() const override { return objective_of(pattern_); }
    [[nodiscard]] Bounds bounds() const override { return chroma::bounds(g_, pattern_, k_, mode_); }
    [[nodiscard]] bool holds(std::span<const Color> colors) const override { return checker_.holds(colors); }
    [[nodiscard]] std::optional<Certificate> certify(std::span<const Color> colors) const override
    {
        return checker_.certify(colors);
    }

  private:
    const Graph & g_;
    Pattern pattern_;
    std::size_t k_;
    DisjointMode mode_;
    detail::ConnectionChecker checker_;
};

class DisconnectionProperty final : public ColoringProperty
{
  public:
    DisconnectionProperty(const Graph & g, Pattern p) : g_(g), pattern_(p), checker_(g, p) {}

    [[nodiscard]] std::string name() const override { return std::string(to_string(pattern_)) + " disconnection"; }
    [[nodiscard]] Objective objective() const override { return objective_of(pattern_); }

    [[nodiscard]] Bounds bounds() const override
    {
        Bounds b;
        const auto m = g_.size();
        if (g_.order() <= 1)
            return b;
        b.upper = m;
        if (pattern_ == Pattern::monochromatic) {
            b.lower = 1;
            b.provenance = {"lower: one color makes every cut monochromatic", "upper: number of edges"};
            return b;
        }
        b.provenance.push_back("upper: all-distinct coloring makes every cut " + std::string(to_string(pattern_)));
        if (pattern_ == Pattern::rainbow) {
            // A rainbow u-v cut has at least as many edges as there are
            // edge-disjoint u-v paths.
            std::size_t local = 1;
            for (Vertex u = 0; u < g_.order(); ++u)
                for (Vertex v = u + 1; v < g_.order(); ++v)
                    local = std::max(local, max_disjoint_paths(g_, u, v, DisjointMode::edge).count);
            b.lower = local;
            b.provenance.insert(b.provenance.begin(), "lower: largest local edge connectivity");
        } else {
            b.lower = 1;
            b.provenance.insert(b.provenance.begin(), "lower: at least one color");
        }
        return b;
    }

    [[nodiscard]] bool holds(std::span<const Color> colors) const override { return checker_.holds(colors); }
    [[nodiscard]] std::optional<Certificate> certify(std::span<const Color> colors) const override
    {
        return checker_.certify(colors);
    }

  private:
    const Graph & g_;
    Pattern pattern_;
    detail::DisconnectionChecker checker_;
};

class ProperRainbowProperty final : public ColoringProperty
{
  public:
    explicit ProperRainbowProperty(const Graph & g) : g_(g), rainbow_(g, Pattern::rainbow, 1, DisjointMode::edge) {}

    [[nodiscard]] std::string name() const override { return "proper rainbow connection"; }
    [[nodiscard]] Objective objective() const override { return Objective::minimize; }

    [[nodiscard]] Bounds bounds() const override
    {
        Bounds b;
        if (g_.order() <= 1)
            return b;
        b.lower = std::max(diameter(g_), g_.max_degree());
        b.upper = g_.size();
        b.provenance = {"lower: max(diameter, maximum degree)", "upper: all-distinct coloring"};
        return b;
    }

    [[nodiscard]] bool holds(std::span<const Color> colors) const override
    {
        return is_proper_edge_coloring(g_, colors) && rainbow_.holds(colors);
    }

    [[nodiscard]] std::optional<Certificate> certify(std::span<const Color> colors) const override
    {
        if (!is_proper_edge_coloring(g_, colors))
            return std::nullopt;
        auto cert = rainbow_.certify(colors);
        if (cert)
            cert->proper_coloring = true;
        return cert;
    }

  private:
    const Graph & g_;
    detail::ConnectionChecker rainbow_;
};

std::uint64_t checked_power(std::uint64_t base, std::size_t exponent, std::uint64_t cap)
{
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (base != 0 && out > cap / base)
            return cap + 1;
        out *= base;
    }
    return out;
}

} // namespace

std::unique_ptr<ColoringProperty> make_connection_property(const Graph & g, Pattern p, std::size_t k, DisjointMode mode)
{
    return std::make_unique<ConnectionProperty>(g, p, k, mode);
}

std::unique_ptr<ColoringProperty> make_disconnection_property(const Graph & g, Pattern p)
{
    return std::make_unique<DisconnectionProperty>(g, p);
}

std::unique_ptr<ColoringProperty> make_proper_rainbow_property(const Graph & g)
{
    return std::make_unique<ProperRainbowProperty>(g);
}

Bounds bounds(const Graph & g, Pattern p, std::size_t k, DisjointMode mode)
{
    (void)mode;
    detail::require_connected(g);
    Bounds b;
    const auto n = g.order();
    const auto m = g.size();
    if (n <= 1)
        return b;
    b.upper = m;
    switch (p) {
    case Pattern::rainbow:
        b.lower = diameter(g);
        b.provenance = {"lower: diameter", "upper: all-distinct coloring"};
        break;
    case Pattern::monochromatic:
        if (k == 1) {
            b.lower = m - n + 2;
            b.provenance = {"lower: spanning tree in one color, other edges distinct", "upper: number of edges"};
        } else {
            b.lower = 1;
            b.provenance = {"lower: one color", "upper: number of edges"};
        }
        break;
    case Pattern::proper:
    case Pattern::conflict_free:
        b.lower = 1;
        b.provenance = {"lower: at least one color", "upper: all-distinct coloring"};
        break;
    }
    return b;
}

SolveResult chromatic_number(const Graph & g, const ColoringProperty & property, SearchBudget budget)
{
    SolveResult result;
    result.objective = property.objective();
    if (g.order() <= 1) {
        result.optimal_coloring = EdgeColoring({}, 0);
        result.certificate = property.certify({}).value();
        return result;
    }

    const auto b = property.bounds();
    const auto m = g.size();
    std::vector<std::size_t> order;
    if (result.objective == Objective::minimize)
        for (auto t = b.lower; t <= b.upper; ++t)
            order.push_back(t);
    else
        for (auto t = b.upper; t >= b.lower && t >= 1; --t)
            order.push_back(t);

    for (auto t : order) {
        if (t == 0 || t > m)
            continue;
        CanonicalColorings walk(m, t, true);
        while (walk.next()) {
            if (++result.nodes_explored > budget.max_nodes)
                throw BudgetExceeded("search budget of " + std::to_string(budget.max_nodes) +
                                         " colorings exhausted while testing " + std::to_string(t) + " colors for " +
                                         property.name(),
                                     budget.max_nodes);
            if (!property.holds(walk.current()))
                continue;
            result.value = t;
            result.optimal_coloring = EdgeColoring(walk.current(), t);
            result.certificate = property.certify(walk.current()).value();
            return result;
        }
    }
    throw std::runtime_error("no coloring within the bounds has the " + property.name() + " property");
}

SolveResult connection_number(const Graph & g, Pattern p, std::size_t k, DisjointMode mode, SearchBudget budget)
{
    ConnectionProperty property(g, p, k, mode);
    return chromatic_number(g, property, budget);
}

SolveResult disconnection_number(const Graph & g, Pattern p, SearchBudget budget)
{
    DisconnectionProperty property(g, p);
    return chromatic_number(g, property, budget);
}

SolveResult proper_rainbow_connection_number(const Graph & g, SearchBudget budget)
{
    ProperRainbowProperty property(g);
    return chromatic_number(g, property, budget);
}

std::string_view to_string(Task t) noexcept { return t == Task::connect ? "connect" : "disconnect"; }

Task parse_task(std::string_view text)
{
    if (text == "connect")
        return Task::connect;
    if (text == "disconnect")
        return Task::disconnect;
    throw std::invalid_argument("unknown task '" + std::string(text) + "'");
}

std::uint64_t count_colorings(const Graph & g, Pattern p, std::size_t t, Task task, SearchBudget budget)
{
    if (t == 0)
        throw std::invalid_argument("palette size must be at least 1");
    std::unique_ptr<ColoringProperty> property = task == Task::connect ? make_connection_property(g, p)
                                                                       : make_disconnection_property(g, p);
    const auto m = g.size();
    const auto total = checked_power(t, m, budget.max_nodes);
    if (total > budget.max_nodes)
        throw BudgetExceeded("counting needs " + std::to_string(t) + "^" + std::to_string(m) +
                                 " colorings, more than the budget of " + std::to_string(budget.max_nodes),
                             budget.max_nodes);

    std::vector<Color> colors(m, 0);
    std::uint64_t count = 0;
    while (true) {
        if (property->holds(colors))
            ++count;
        std::size_t i = 0;
        while (i < m && ++colors[i] == t)
            colors[i++] = 0;
        if (i == m)
            break;
    }
    return count;
}

nlohmann::ordered_json to_json(const Graph & g, const SolveResult & result, std::string_view pattern, Task task,
                               std::size_t k, DisjointMode mode)
{
    nlohmann::ordered_json doc;
    doc["graph"] = write_graph6(g);
    doc["pattern"] = pattern;
    doc["task"] = to_string(task);
    doc["k"] = k;
    doc["mode"] = to_string(mode);
    doc["objective"] = to_string(result.objective);
    doc["value"] = result.value;
    doc["coloring"] = result.optimal_coloring.to_string();
    doc["certificate"] = to_json(result.certificate);
    doc["nodes_explored"] = result.nodes_explored;
    return doc;
}

} // namespace chroma
