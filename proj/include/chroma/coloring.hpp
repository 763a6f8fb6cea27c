#pragma once

#include <chroma/graph.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chroma {

using Color = std::uint32_t;

class ColoringError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// One color per edge index; every color is below palette_size().
class EdgeColoring
{
  public:
    EdgeColoring() = default;
    EdgeColoring(std::vector<Color> colors, std::size_t palette_size);

    /// Palette is one more than the largest color used.
    static EdgeColoring from_colors(std::vector<Color> colors);

    /// Parses "0,1,0,2"; the empty string is the coloring of an edgeless graph.
    static EdgeColoring parse(std::string_view text);

    [[nodiscard]] std::size_t size() const noexcept { return colors_.size(); }
    [[nodiscard]] std::size_t palette_size() const noexcept { return palette_; }
    [[nodiscard]] Color operator[](EdgeIndex e) const { return colors_.at(e); }
    [[nodiscard]] std::span<const Color> colors() const noexcept { return colors_; }
    [[nodiscard]] std::size_t distinct_colors() const;

    /// Throws ColoringError unless there is exactly one color per edge of g.
    void require_fits(const Graph & g) const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const EdgeColoring &, const EdgeColoring &) = default;

  private:
    std::vector<Color> colors_;
    std::size_t palette_ = 0;
};

enum class Pattern
{
    rainbow,
    proper,
    monochromatic,
    conflict_free
};

enum class Objective
{
    minimize,
    maximize
};

/// Monochromatic colorings are scored by the most colors, the rest by the fewest.
constexpr Objective objective_of(Pattern p) noexcept
{
    return p == Pattern::monochromatic ? Objective::maximize : Objective::minimize;
}

std::string_view to_string(Pattern p) noexcept;
std::string_view to_string(Objective o) noexcept;

/// Accepts "rainbow", "proper", "monochromatic", "conflict-free" (or
/// "conflict_free").
Pattern parse_pattern(std::string_view text);

/// Whether a color sequence read along a path has the pattern. Sequences of
/// length 0 or 1 have every pattern.
bool colors_satisfy(std::span<const Color> colors, Pattern p);

/// Throws ColoringError if the path is not a simple path of g or the coloring
/// does not fit g.
bool path_satisfies(const Graph & g, const EdgeColoring & coloring, const Path & path, Pattern p);

/// A witnessing simple u-v path with the pattern, or nullopt. u == v gives the
/// single-vertex path.
std::optional<Path> exists_pattern_path(const Graph & g, const EdgeColoring & coloring, Vertex u, Vertex v, Pattern p);

/// Restricts a pattern-path search: blocked edges and vertices are never used.
/// The endpoints themselves are never checked against blocked vertices.
struct PathSearchMask
{
    std::vector<bool> blocked_edges;
    std::vector<bool> blocked_vertices;
};

/// Calls visit on every simple u-v path with the pattern that avoids the mask,
/// in depth-first order over ascending neighbour ids, until visit returns
/// false. Returns false iff visit stopped the walk.
bool for_each_pattern_path(const Graph & g, std::span<const Color> colors, Vertex u, Vertex v, Pattern p,
                           const PathSearchMask * mask, const std::function<bool(const Path &)> & visit);

/// Colorings of m edges with palette k, one per class under renaming of
/// colors, as restricted-growth strings in lexicographic order. With
/// surjective set, only strings using all k colors.
class CanonicalColorings
{
  public:
    CanonicalColorings(std::size_t m, std::size_t k, bool surjective);

    /// Advances to the next string; false once exhausted.
    bool next();
    [[nodiscard]] const std::vector<Color> & current() const noexcept { return colors_; }

  private:
    bool first_valid(std::size_t from);

    std::size_t m_;
    std::size_t k_;
    bool surjective_;
    bool started_ = false;
    bool done_ = false;
    std::vector<Color> colors_;
    // prefix_blocks_[i] = number of distinct colors among colors_[0..i].
    std::vector<std::size_t> prefix_blocks_;
};

std::vector<EdgeColoring> canonical_colorings(std::size_t m, std::size_t k, bool surjective);

} // namespace chroma
