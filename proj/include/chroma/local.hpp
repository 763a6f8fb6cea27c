#pragma once

#include <chroma/coloring.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace chroma {

using BigInt = boost::multiprecision::cpp_int;

/// Proper edge coloring: no vertex sees the same color on two incident edges.
/// Throws ColoringError on a length mismatch.
bool is_proper_edge_coloring(const Graph & g, const EdgeColoring & coloring);
bool is_proper_edge_coloring(const Graph & g, std::span<const Color> colors);

/// Integer polynomial in one variable; coefficient i multiplies k^i. Trailing
/// zeros are trimmed, so the zero polynomial has no coefficients.
class Polynomial
{
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigInt> coefficients);

    static Polynomial monomial(std::size_t degree);

    [[nodiscard]] const std::vector<BigInt> & coefficients() const noexcept { return coeffs_; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    /// Horner evaluation.
    [[nodiscard]] BigInt operator()(const BigInt & t) const;

    /// "c0,c1,...,cd"; "0" for the zero polynomial.
    [[nodiscard]] std::string to_string() const;

    friend Polynomial operator+(const Polynomial & a, const Polynomial & b);
    friend Polynomial operator-(const Polynomial & a, const Polynomial & b);
    friend Polynomial operator*(const Polynomial & a, const Polynomial & b);
    friend bool operator==(const Polynomial &, const Polynomial &) = default;

  private:
    void trim();

    std::vector<BigInt> coeffs_;
};

/// Number of proper vertex k-colorings as a polynomial in k, by deletion and
/// contraction: f(G) = f(G - e) - f(G / e), with f(edgeless on n) = k^n.
/// Dense graphs are reduced with the same identity read the other way,
/// f(G) = f(G + e) + f(G / e) for a non-edge e, down to complete graphs.
Polynomial chromatic_polynomial(const Graph & g);

/// Proper edge k-colorings, as the chromatic polynomial of the line graph.
Polynomial edge_chromatic_polynomial(const Graph & g);

BigInt evaluate_polynomial(const Polynomial & p, std::uint64_t t);

/// f(G, 4) > 0. Planarity is the caller's concern.
bool four_color_check(const Graph & g);

/// Symmetric local lemma condition p <= 1 / (e (d + 1)). The comparison
/// admits p up to one ulp above the computed threshold. Throws
/// std::invalid_argument for p outside [0, 1] or negative d.
bool lll_condition(double p, long d);

/// Product over vertices of degree >= 2 of (x_e - x_f) over unordered pairs
/// {e, f} of incident edges, e < f by edge index. 1 when no vertex has degree
/// 2 or more. Throws ColoringError on a length mismatch.
BigInt nullstellensatz_value(const Graph & g, std::span<const std::int64_t> assignment);

} // namespace chroma
