#include <chroma/graph6.hpp>

#include <cstdint>

namespace chroma {

namespace {

constexpr std::string_view header = ">>graph6<<";
constexpr std::uint64_t small_limit = 62;
constexpr std::uint64_t medium_limit = 258047;

std::uint32_t sextet(char c)
{
    auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126)
        throw Graph6Error("graph6 byte " + std::to_string(b) + " outside the printable range 63..126");
    return b - 63U;
}

} // namespace

Graph parse_graph6(std::string_view text)
{
    if (text.starts_with(header))
        text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty())
        throw Graph6Error("empty graph6 record");

    std::size_t pos = 0;
    auto read_bytes = [&](std::size_t count) {
        if (text.size() < pos + count)
            throw Graph6Error("malformed graph6 length prefix");
        std::uint64_t value = 0;
        for (std::size_t i = 0; i < count; ++i)
            value = (value << 6) | sextet(text[pos++]);
        return value;
    };

    std::uint64_t n = 0;
    if (sextet(text[0]) != 63) {
        n = read_bytes(1);
    } else {
        ++pos;
        if (text.size() > 1 && sextet(text[1]) == 63) {
            ++pos;
            n = read_bytes(6);
            if (n <= medium_limit)
                throw Graph6Error("malformed graph6 length prefix: non-minimal 8-byte form");
        } else {
            n = read_bytes(3);
            if (n <= small_limit)
                throw Graph6Error("malformed graph6 length prefix: non-minimal 4-byte form");
        }
    }

    if (n > std::uint64_t{1} << 31)
        throw Graph6Error("graph6 order " + std::to_string(n) + " is too large");
    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes)
        throw Graph6Error("graph6 record has " + std::to_string(text.size() - pos) + " data bytes, expected " +
                          std::to_string(bytes));

    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::uint64_t k = 0;
    for (std::uint32_t j = 1; j < n; ++j)
        for (std::uint32_t i = 0; i < j; ++i, ++k) {
            auto byte = sextet(text[pos + k / 6]);
            if ((byte >> (5 - k % 6)) & 1U)
                pairs.emplace_back(i, j);
        }
    for (; k < bytes * 6; ++k)
        if ((sextet(text[pos + k / 6]) >> (5 - k % 6)) & 1U)
            throw Graph6Error("graph6 trailing padding bits are nonzero");

    return Graph(static_cast<std::size_t>(n), pairs);
}

std::string write_graph6(const Graph & g)
{
    const std::uint64_t n = g.order();
    std::string out;
    auto put = [&](std::uint64_t value, int sextets) {
        for (int s = sextets - 1; s >= 0; --s)
            out.push_back(static_cast<char>(((value >> (6 * s)) & 63U) + 63));
    };
    if (n <= small_limit) {
        put(n, 1);
    } else if (n <= medium_limit) {
        out.push_back(126);
        put(n, 3);
    } else {
        out.append(2, static_cast<char>(126));
        put(n, 6);
    }

    std::uint32_t acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

} // namespace chroma
