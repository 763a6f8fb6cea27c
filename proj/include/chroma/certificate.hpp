#pragma once

#include <chroma/coloring.hpp>

#include <json.hpp>

namespace chroma {

enum class CertificateKind
{
    connection,
    k_connection,
    disconnection
};

/// Witness for one unordered pair u < v: the pattern paths (connection kinds)
/// or the side S of a bipartition with u in S and v outside it whose crossing
/// cut has the pattern (disconnection).
struct PairWitness
{
    Vertex u = 0;
    Vertex v = 0;
    std::vector<Path> paths;
    std::vector<Vertex> side;

    friend bool operator==(const PairWitness &, const PairWitness &) = default;
};

struct Certificate
{
    CertificateKind kind = CertificateKind::connection;
    Pattern pattern = Pattern::rainbow;
    /// Set for proper rainbow connection: the coloring itself must also be a
    /// proper edge coloring.
    bool proper_coloring = false;
    std::size_t k = 1;
    DisjointMode mode = DisjointMode::edge;
    std::vector<PairWitness> pairs;

    friend bool operator==(const Certificate &, const Certificate &) = default;
};

class CertificateFormatError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

std::string_view to_string(CertificateKind kind) noexcept;
std::string_view to_string(DisjointMode mode) noexcept;
DisjointMode parse_mode(std::string_view text);

/// {kind, pattern, k, mode, pairs: [{u, v, paths: [[v0..vl], ...]} | {u, v, side: [...]}]}
/// with fields in that order.
nlohmann::ordered_json to_json(const Certificate & cert);

/// Reads the to_json layout. Path edges are resolved against g; a step that is
/// not an edge of g is kept as an unresolvable edge so that verification
/// fails instead of the parse.
Certificate certificate_from_json(const nlohmann::json & doc, const Graph & g);

} // namespace chroma
