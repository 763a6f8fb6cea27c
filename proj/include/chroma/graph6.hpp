#pragma once

#include <chroma/graph.hpp>

#include <string>
#include <string_view>

namespace chroma {

class Graph6Error : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// Decodes one graph6 record. Accepts an optional ">>graph6<<" header and a
/// trailing newline; rejects bytes outside 63..126, truncated data, extra
/// bytes and nonzero padding bits.
Graph parse_graph6(std::string_view text);

/// Encodes without header or newline.
std::string write_graph6(const Graph & g);

} // namespace chroma
