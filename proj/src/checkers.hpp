#pragma once

#include <chroma/certificate.hpp>

#include <optional>
#include <span>
#include <vector>

namespace chroma::detail {

/// Pattern (k-)connection test for one graph, reused across many colorings.
/// The constructor enforces the connectivity precondition.
class ConnectionChecker
{
  public:
    ConnectionChecker(const Graph & g, Pattern p, std::size_t k, DisjointMode mode);

    [[nodiscard]] bool holds(std::span<const Color> colors) const;
    [[nodiscard]] std::optional<Certificate> certify(std::span<const Color> colors) const;

  private:
    [[nodiscard]] std::optional<std::vector<Path>> family(std::span<const Color> colors, Vertex u, Vertex v) const;

    const Graph & g_;
    Pattern pattern_;
    std::size_t k_;
    DisjointMode mode_;
    // Pairs tried by holds(): farthest first, since they fail most often.
    std::vector<std::pair<Vertex, Vertex>> probe_order_;
};

/// Pattern disconnection test with every pair's bipartition cuts precomputed.
class DisconnectionChecker
{
  public:
    DisconnectionChecker(const Graph & g, Pattern p);

    [[nodiscard]] bool holds(std::span<const Color> colors) const;
    [[nodiscard]] std::optional<Certificate> certify(std::span<const Color> colors) const;

  private:
    struct Cut
    {
        std::vector<Vertex> side;
        std::vector<EdgeIndex> edges;
        // Cut edges sharing an endpoint; only filled for the proper pattern.
        std::vector<std::pair<EdgeIndex, EdgeIndex>> touching;
    };
    struct PairCuts
    {
        Vertex u;
        Vertex v;
        std::vector<Cut> cuts;
    };

    [[nodiscard]] bool satisfied(const Cut & cut, std::span<const Color> colors) const;
    [[nodiscard]] const Cut * witness(const PairCuts & pc, std::span<const Color> colors) const;

    const Graph & g_;
    Pattern pattern_;
    std::vector<PairCuts> pairs_;
};

void require_connected(const Graph & g);

} // namespace chroma::detail
