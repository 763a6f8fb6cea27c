#include <chroma/coloring.hpp>

#include <algorithm>
#include <charconv>
#include <set>

namespace chroma {

EdgeColoring::EdgeColoring(std::vector<Color> colors, std::size_t palette_size) :
    colors_(std::move(colors)), palette_(palette_size)
{
    for (auto c : colors_)
        if (c >= palette_)
            throw ColoringError("color " + std::to_string(c) + " is outside the palette of size " + std::to_string(palette_));
}

EdgeColoring EdgeColoring::from_colors(std::vector<Color> colors)
{
    std::size_t palette = 0;
    for (auto c : colors)
        palette = std::max<std::size_t>(palette, std::size_t{c} + 1);
    return EdgeColoring(std::move(colors), palette);
}

EdgeColoring EdgeColoring::parse(std::string_view text)
{
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    std::vector<Color> colors;
    if (text.empty())
        return from_colors(colors);
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        auto field = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        Color c = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), c);
        if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty())
            throw ColoringError("malformed color '" + std::string(field) + "' in coloring text");
        colors.push_back(c);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return from_colors(std::move(colors));
}

std::size_t EdgeColoring::distinct_colors() const
{
    return std::set<Color>(colors_.begin(), colors_.end()).size();
}

void EdgeColoring::require_fits(const Graph & g) const
{
    if (colors_.size() != g.size())
        throw ColoringError("coloring has " + std::to_string(colors_.size()) + " colors for a graph with " +
                            std::to_string(g.size()) + " edges");
}

std::string EdgeColoring::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < colors_.size(); ++i) {
        if (i > 0)
            out.push_back(',');
        out += std::to_string(colors_[i]);
    }
    return out;
}

std::string_view to_string(Pattern p) noexcept
{
    switch (p) {
    case Pattern::rainbow:
        return "rainbow";
    case Pattern::proper:
        return "proper";
    case Pattern::monochromatic:
        return "monochromatic";
    case Pattern::conflict_free:
        return "conflict-free";
    }
    return "?";
}

std::string_view to_string(Objective o) noexcept { return o == Objective::minimize ? "min" : "max"; }

Pattern parse_pattern(std::string_view text)
{
    if (text == "rainbow")
        return Pattern::rainbow;
    if (text == "proper")
        return Pattern::proper;
    if (text == "monochromatic")
        return Pattern::monochromatic;
    if (text == "conflict-free" || text == "conflict_free")
        return Pattern::conflict_free;
    throw ColoringError("unknown pattern '" + std::string(text) + "'");
}

bool colors_satisfy(std::span<const Color> colors, Pattern p)
{
    if (colors.size() <= 1)
        return true;
    switch (p) {
    case Pattern::rainbow: {
        std::vector<Color> sorted(colors.begin(), colors.end());
        std::sort(sorted.begin(), sorted.end());
        return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }
    case Pattern::proper:
        return std::adjacent_find(colors.begin(), colors.end()) == colors.end();
    case Pattern::monochromatic:
        return std::all_of(colors.begin(), colors.end(), [&](Color c) { return c == colors.front(); });
    case Pattern::conflict_free:
        return std::any_of(colors.begin(), colors.end(),
                           [&](Color c) { return std::count(colors.begin(), colors.end(), c) == 1; });
    }
    return false;
}

bool path_satisfies(const Graph & g, const EdgeColoring & coloring, const Path & path, Pattern p)
{
    coloring.require_fits(g);
    if (!is_simple_path(g, path))
        throw ColoringError("path is not a simple path of the colored graph");
    std::vector<Color> seq;
    seq.reserve(path.edges.size());
    for (auto e : path.edges)
        seq.push_back(coloring[e]);
    return colors_satisfy(seq, p);
}

CanonicalColorings::CanonicalColorings(std::size_t m, std::size_t k, bool surjective) :
    m_(m), k_(k), surjective_(surjective), colors_(m, 0), prefix_blocks_(m, 0)
{
    if (k == 0)
        throw ColoringError("palette size must be at least 1");
}

bool CanonicalColorings::first_valid(std::size_t from)
{
    std::size_t blocks = from > 0 ? prefix_blocks_[from - 1] : 0;
    for (std::size_t j = from; j < m_; ++j) {
        const std::size_t remaining = m_ - 1 - j;
        const bool zero_ok = blocks > 0 && (!surjective_ || blocks + remaining >= k_);
        if (zero_ok) {
            colors_[j] = 0;
        } else {
            if (blocks >= k_)
                return false;
            colors_[j] = static_cast<Color>(blocks++);
        }
        prefix_blocks_[j] = blocks;
    }
    return !surjective_ || blocks == k_;
}

bool CanonicalColorings::next()
{
    if (done_)
        return false;
    if (!started_) {
        started_ = true;
        if (!first_valid(0))
            done_ = true;
        return !done_;
    }
    for (std::size_t i = m_; i-- > 1;) {
        const std::size_t before = prefix_blocks_[i - 1];
        const std::size_t value = std::size_t{colors_[i]} + 1;
        if (value > before || value >= k_)
            continue;
        const std::size_t blocks = std::max(before, value + 1);
        if (surjective_ && blocks + (m_ - 1 - i) < k_)
            continue;
        colors_[i] = static_cast<Color>(value);
        prefix_blocks_[i] = blocks;
        if (first_valid(i + 1))
            return true;
    }
    done_ = true;
    return false;
}

std::vector<EdgeColoring> canonical_colorings(std::size_t m, std::size_t k, bool surjective)
{
    std::vector<EdgeColoring> out;
    CanonicalColorings walk(m, k, surjective);
    while (walk.next())
        out.emplace_back(walk.current(), k);
    return out;
}

} // namespace chroma
