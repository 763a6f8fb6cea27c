#include <chroma/certificate.hpp>

#include <limits>

namespace chroma {

std::string_view to_string(CertificateKind kind) noexcept
{
    switch (kind) {
    case CertificateKind::connection:
        return "connection";
    case CertificateKind::k_connection:
        return "k_connection";
    case CertificateKind::disconnection:
        return "disconnection";
    }
    return "?";
}

std::string_view to_string(DisjointMode mode) noexcept { return mode == DisjointMode::edge ? "edge" : "vertex"; }

DisjointMode parse_mode(std::string_view text)
{
    if (text == "edge")
        return DisjointMode::edge;
    if (text == "vertex")
        return DisjointMode::vertex;
    throw std::invalid_argument("unknown disjointness mode '" + std::string(text) + "'");
}

nlohmann::ordered_json to_json(const Certificate & cert)
{
    nlohmann::ordered_json doc;
    doc["kind"] = to_string(cert.kind);
    doc["pattern"] = cert.proper_coloring ? std::string("proper-rainbow") : std::string(to_string(cert.pattern));
    doc["k"] = cert.k;
    doc["mode"] = to_string(cert.mode);
    auto pairs = nlohmann::ordered_json::array();
    for (const auto & w : cert.pairs) {
        nlohmann::ordered_json entry;
        entry["u"] = w.u;
        entry["v"] = w.v;
        if (cert.kind == CertificateKind::disconnection) {
            entry["side"] = w.side;
        } else {
            auto paths = nlohmann::ordered_json::array();
            for (const auto & p : w.paths)
                paths.push_back(p.vertices);
            entry["paths"] = std::move(paths);
        }
        pairs.push_back(std::move(entry));
    }
    doc["pairs"] = std::move(pairs);
    return doc;
}

Certificate certificate_from_json(const nlohmann::json & doc, const Graph & g)
{
    try {
        Certificate cert;
        const auto kind = doc.at("kind").get<std::string>();
        if (kind == "connection")
            cert.kind = CertificateKind::connection;
        else if (kind == "k_connection")
            cert.kind = CertificateKind::k_connection;
        else if (kind == "disconnection")
            cert.kind = CertificateKind::disconnection;
        else
            throw CertificateFormatError("unknown certificate kind '" + kind + "'");

        const auto pattern = doc.at("pattern").get<std::string>();
        if (pattern == "proper-rainbow") {
            cert.pattern = Pattern::rainbow;
            cert.proper_coloring = true;
        } else {
            cert.pattern = parse_pattern(pattern);
        }
        cert.k = doc.value("k", std::size_t{1});
        cert.mode = parse_mode(doc.value("mode", std::string("edge")));

        for (const auto & entry : doc.at("pairs")) {
            PairWitness w;
            w.u = entry.at("u").get<Vertex>();
            w.v = entry.at("v").get<Vertex>();
            if (entry.contains("side"))
                w.side = entry.at("side").get<std::vector<Vertex>>();
            if (entry.contains("paths")) {
                for (const auto & seq : entry.at("paths")) {
                    Path p;
                    p.vertices = seq.get<std::vector<Vertex>>();
                    for (std::size_t i = 1; i < p.vertices.size(); ++i)
                        p.edges.push_back(
                            g.edge_between(p.vertices[i - 1], p.vertices[i]).value_or(std::numeric_limits<EdgeIndex>::max()));
                    w.paths.push_back(std::move(p));
                }
            }
            cert.pairs.push_back(std::move(w));
        }
        return cert;
    } catch (const nlohmann::json::exception & e) {
        throw CertificateFormatError(std::string("malformed certificate JSON: ") + e.what());
    } catch (const ColoringError & e) {
        throw CertificateFormatError(e.what());
    } catch (const std::invalid_argument & e) {
        throw CertificateFormatError(e.what());
    }
}

} // namespace chroma
