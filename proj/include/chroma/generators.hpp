#pragma once

#include <chroma/graph.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace chroma {

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
Graph star_graph(std::size_t leaves);
Graph petersen_graph();

/// Every connected graph on 1..max_order vertices, one per isomorphism class,
/// each relabelled to its canonical form. Ordered by (order, size, canonical
/// key). max_order <= 7.
std::vector<Graph> all_connected_up_to(std::size_t max_order);

/// Key that is equal for two graphs iff they are isomorphic: the
/// lexicographically smallest upper-triangle adjacency string over all vertex
/// orderings that list vertices by non-increasing degree. Exhaustive, so only
/// meant for small orders.
std::string canonical_key(const Graph & g);

/// g relabelled so that its adjacency string equals canonical_key(g).
Graph canonical_form(const Graph & g);

/// Dispatch by family name: path, cycle, complete, complete_bipartite, star,
/// petersen, all_connected_up_to. Throws GraphError on an unknown name or bad
/// parameters.
std::vector<Graph> generate(std::string_view family, const std::vector<std::size_t> & params);

} // namespace chroma
