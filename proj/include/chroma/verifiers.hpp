#pragma once

#include <chroma/certificate.hpp>

namespace chroma {

/// Certificate with one pattern path per pair of distinct vertices, or nullopt
/// if some pair has none. Throws GraphError for a disconnected graph.
std::optional<Certificate> is_pattern_connected(const Graph & g, const EdgeColoring & coloring, Pattern p);

/// k pairwise edge-disjoint (edge mode) or internally vertex-disjoint (vertex
/// mode) pattern paths per pair. Throws GraphError unless g is k-connected in
/// that mode.
std::optional<Certificate> is_pattern_k_connected(const Graph & g, const EdgeColoring & coloring, Pattern p,
                                                  std::size_t k, DisjointMode mode);

/// One bipartition per pair whose crossing cut has the pattern. Rainbow: cut
/// colors pairwise distinct. Monochromatic: one color. Proper: cut edges that
/// share an endpoint differ. Conflict-free cuts are not defined and throw
/// ColoringError.
std::optional<Certificate> is_pattern_disconnected(const Graph & g, const EdgeColoring & coloring, Pattern p);

/// Proper edge coloring that is also rainbow connecting.
std::optional<Certificate> is_proper_rainbow_connected(const Graph & g, const EdgeColoring & coloring);

/// Cut-pattern predicate used by the disconnection verifier.
bool cut_satisfies(const Graph & g, std::span<const Color> colors, const EdgeSet & cut, Pattern p);

/// Polynomial-time check of a certificate against a colored graph. Never
/// throws; anything malformed yields false.
bool verify_certificate(const Graph & g, const EdgeColoring & coloring, const Certificate & cert) noexcept;

} // namespace chroma
