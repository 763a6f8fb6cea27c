#include <chroma/generators.hpp>
#include <chroma/graph6.hpp>
#include <chroma/local.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <unordered_map>

namespace chroma {

bool is_proper_edge_coloring(const Graph & g, std::span<const Color> colors)
{
    if (colors.size() != g.size())
        throw ColoringError("coloring has " + std::to_string(colors.size()) + " colors for a graph with " +
                            std::to_string(g.size()) + " edges");
    for (Vertex v = 0; v < g.order(); ++v) {
        auto inc = g.incident(v);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                if (colors[inc[i].edge] == colors[inc[j].edge])
                    return false;
    }
    return true;
}

bool is_proper_edge_coloring(const Graph & g, const EdgeColoring & coloring)
{
    return is_proper_edge_coloring(g, coloring.colors());
}

Polynomial::Polynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(std::size_t degree)
{
    std::vector<BigInt> c(degree + 1, 0);
    c[degree] = 1;
    return Polynomial(std::move(c));
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

BigInt Polynomial::operator()(const BigInt & t) const
{
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

std::string Polynomial::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0)
            out.push_back(',');
        out += coeffs_[i].str();
    }
    return out;
}

Polynomial operator+(const Polynomial & a, const Polynomial & b)
{
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        c[i] += b.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial & a, const Polynomial & b)
{
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        c[i] -= b.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial & a, const Polynomial & b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

namespace {

// k (k - 1) ... (k - n + 1)
Polynomial falling_factorial(std::size_t n)
{
    Polynomial p = Polynomial::monomial(0);
    for (std::size_t i = 0; i < n; ++i)
        p = p * Polynomial({-BigInt(i), 1});
    return p;
}

class ChromaticSolver
{
  public:
    Polynomial solve(const Graph & g)
    {
        const auto n = g.order();
        const auto m = g.size();
        if (m == 0)
            return Polynomial::monomial(n);
        if (m == n * (n - 1) / 2)
            return falling_factorial(n);

        auto key = memo_key(g);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;

        Polynomial result;
        if (auto parts = components(g); parts.size() > 1) {
            result = Polynomial::monomial(0);
            for (const auto & part : parts)
                result = result * solve(induced_subgraph(g, part));
        } else if (m + 1 == n) {
            result = Polynomial({0, 1}) * power(Polynomial({-1, 1}), n - 1);
        } else if (2 * m > n * (n - 1) / 2) {
            auto [a, b] = first_non_edge(g);
            std::vector<std::pair<Vertex, Vertex>> pairs;
            for (const auto & e : g.edges())
                pairs.emplace_back(e.u, e.v);
            pairs.emplace_back(a, b);
            Graph added(n, pairs);
            result = solve(added) + solve(contract_edge(added, *added.edge_between(a, b)));
        } else {
            const auto e = static_cast<EdgeIndex>(m - 1);
            result = solve(delete_edge(g, e)) - solve(contract_edge(g, e));
        }
        memo_.emplace(std::move(key), result);
        return result;
    }

  private:
    static std::string memo_key(const Graph & g)
    {
        // Exhaustive canonical keys pay off only while n! stays small.
        if (g.order() <= 6)
            return std::to_string(g.order()) + ":" + canonical_key(g);
        return write_graph6(g);
    }

    static std::vector<std::vector<Vertex>> components(const Graph & g)
    {
        std::vector<int> label(g.order(), -1);
        std::vector<std::vector<Vertex>> out;
        for (Vertex s = 0; s < g.order(); ++s) {
            if (label[s] >= 0)
                continue;
            out.emplace_back();
            std::vector<Vertex> stack{s};
            label[s] = static_cast<int>(out.size() - 1);
            while (!stack.empty()) {
                auto x = stack.back();
                stack.pop_back();
                out.back().push_back(x);
                for (const auto & inc : g.incident(x))
                    if (label[inc.neighbour] < 0) {
                        label[inc.neighbour] = label[s];
                        stack.push_back(inc.neighbour);
                    }
            }
        }
        return out;
    }

    static std::pair<Vertex, Vertex> first_non_edge(const Graph & g)
    {
        for (Vertex a = 0; a < g.order(); ++a)
            for (Vertex b = a + 1; b < g.order(); ++b)
                if (!g.adjacent(a, b))
                    return {a, b};
        throw std::logic_error("complete graph has no non-edge");
    }

    static Polynomial power(const Polynomial & p, std::size_t e)
    {
        Polynomial out = Polynomial::monomial(0);
        for (std::size_t i = 0; i < e; ++i)
            out = out * p;
        return out;
    }

    std::unordered_map<std::string, Polynomial> memo_;
};

} // namespace

Polynomial chromatic_polynomial(const Graph & g)
{
    ChromaticSolver solver;
    return solver.solve(g);
}

Polynomial edge_chromatic_polynomial(const Graph & g) { return chromatic_polynomial(line_graph(g)); }

BigInt evaluate_polynomial(const Polynomial & p, std::uint64_t t) { return p(BigInt(t)); }

bool four_color_check(const Graph & g) { return evaluate_polynomial(chromatic_polynomial(g), 4) > 0; }

bool lll_condition(double p, long d)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("probability must lie in [0, 1]");
    if (d < 0)
        throw std::invalid_argument("dependency degree must be nonnegative");
    const double threshold = 1.0 / (std::numbers::e * static_cast<double>(d + 1));
    return p <= std::nextafter(threshold, std::numeric_limits<double>::infinity());
}

BigInt nullstellensatz_value(const Graph & g, std::span<const std::int64_t> assignment)
{
    if (assignment.size() != g.size())
        throw ColoringError("assignment has " + std::to_string(assignment.size()) + " values for a graph with " +
                            std::to_string(g.size()) + " edges");
    BigInt product = 1;
    for (Vertex v = 0; v < g.order(); ++v) {
        auto inc = g.incident(v);
        if (inc.size() < 2)
            continue;
        std::vector<EdgeIndex> edges;
        for (const auto & i : inc)
            edges.push_back(i.edge);
        std::sort(edges.begin(), edges.end());
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = i + 1; j < edges.size(); ++j)
                product *= BigInt(assignment[edges[i]]) - BigInt(assignment[edges[j]]);
    }
    return product;
}

} // namespace chroma
