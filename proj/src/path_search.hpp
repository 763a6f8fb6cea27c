#pragma once

#include <chroma/coloring.hpp>

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

namespace chroma::detail {

/// Depth-first enumeration of simple u-v paths whose colors can still complete
/// to the pattern. Partial paths are pruned as soon as the pattern rules them
/// out: a repeated color (rainbow), two equal consecutive colors (proper) or a
/// color change (monochromatic). Conflict-free paths are only tested on
/// arrival at v.
class PatternDfs
{
  public:
    PatternDfs(const Graph & g, std::span<const Color> colors, Pattern p, const PathSearchMask * mask = nullptr) :
        g_(g), colors_(colors), pattern_(p), mask_(mask), on_path_(g.order(), false)
    {
        Color top = 0;
        for (auto c : colors)
            top = std::max(top, c);
        counts_.assign(static_cast<std::size_t>(top) + 1, 0);
    }

    /// visit(const Path &) returns false to stop. Returns false iff stopped.
    template <class Visit>
    bool run(Vertex u, Vertex v, Visit && visit)
    {
        target_ = v;
        path_.vertices.assign(1, u);
        path_.edges.clear();
        singles_ = 0;
        std::fill(counts_.begin(), counts_.end(), 0);
        std::fill(on_path_.begin(), on_path_.end(), false);
        on_path_[u] = true;
        if (u == v)
            return visit(static_cast<const Path &>(path_));
        return extend(u, visit);
    }

  private:
    [[nodiscard]] bool admissible(Color c) const
    {
        switch (pattern_) {
        case Pattern::rainbow:
            return counts_[c] == 0;
        case Pattern::proper:
            return path_.edges.empty() || colors_[path_.edges.back()] != c;
        case Pattern::monochromatic:
            return path_.edges.empty() || colors_[path_.edges.front()] == c;
        case Pattern::conflict_free:
            return true;
        }
        return true;
    }

    template <class Visit>
    bool extend(Vertex x, Visit & visit)
    {
        for (const auto & inc : g_.incident(x)) {
            auto y = inc.neighbour;
            if (on_path_[y])
                continue;
            if (mask_ && ((!mask_->blocked_edges.empty() && mask_->blocked_edges[inc.edge]) ||
                          (y != target_ && !mask_->blocked_vertices.empty() && mask_->blocked_vertices[y])))
                continue;
            auto c = colors_[inc.edge];
            if (!admissible(c))
                continue;

            push(y, inc.edge, c);
            bool keep_going = true;
            if (y == target_) {
                if (pattern_ != Pattern::conflict_free || singles_ > 0)
                    keep_going = visit(static_cast<const Path &>(path_));
            } else {
                keep_going = extend(y, visit);
            }
            pop(y, c);
            if (!keep_going)
                return false;
        }
        return true;
    }

    void push(Vertex y, EdgeIndex e, Color c)
    {
        on_path_[y] = true;
        path_.vertices.push_back(y);
        path_.edges.push_back(e);
        if (++counts_[c] == 1)
            ++singles_;
        else if (counts_[c] == 2)
            --singles_;
    }

    void pop(Vertex y, Color c)
    {
        on_path_[y] = false;
        path_.vertices.pop_back();
        path_.edges.pop_back();
        if (--counts_[c] == 1)
            ++singles_;
        else if (counts_[c] == 0)
            --singles_;
    }

    const Graph & g_;
    std::span<const Color> colors_;
    Pattern pattern_;
    const PathSearchMask * mask_;
    Vertex target_ = 0;
    Path path_;
    std::vector<bool> on_path_;
    std::vector<std::uint32_t> counts_;
    std::size_t singles_ = 0;
};

/// exists_pattern_path without the coloring-object wrapper; colors must have
/// one entry per edge.
std::optional<Path> find_pattern_path(const Graph & g, std::span<const Color> colors, Vertex u, Vertex v, Pattern p);

} // namespace chroma::detail
