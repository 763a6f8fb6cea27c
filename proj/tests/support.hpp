#pragma once

#include "oracle.hpp"

#include <chroma/coloring.hpp>
#include <chroma/generators.hpp>

#include <random>
#include <vector>

namespace support {

inline const std::vector<chroma::Graph> & connected_graphs(std::size_t max_order)
{
    static std::vector<std::vector<chroma::Graph>> cache(8);
    auto & slot = cache.at(max_order);
    if (slot.empty())
        slot = chroma::all_connected_up_to(max_order);
    return slot;
}

inline std::vector<int> as_ints(std::span<const chroma::Color> colors)
{
    return {colors.begin(), colors.end()};
}

inline chroma::EdgeColoring random_coloring(std::size_t m, std::size_t palette, std::mt19937 & rng)
{
    std::uniform_int_distribution<chroma::Color> pick(0, static_cast<chroma::Color>(palette - 1));
    std::vector<chroma::Color> colors(m);
    for (auto & c : colors)
        c = pick(rng);
    return chroma::EdgeColoring(colors, palette);
}

inline oracle::Kind kind_of(chroma::Pattern p)
{
    switch (p) {
    case chroma::Pattern::rainbow:
        return oracle::Kind::rainbow;
    case chroma::Pattern::proper:
        return oracle::Kind::proper;
    case chroma::Pattern::monochromatic:
        return oracle::Kind::mono;
    case chroma::Pattern::conflict_free:
        return oracle::Kind::conflict_free;
    }
    return oracle::Kind::rainbow;
}

inline constexpr chroma::Pattern all_patterns[] = {chroma::Pattern::rainbow, chroma::Pattern::proper,
                                                   chroma::Pattern::monochromatic, chroma::Pattern::conflict_free};

} // namespace support
