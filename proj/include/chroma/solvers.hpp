#pragma once

#include <chroma/certificate.hpp>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace chroma {

/// Raised when a search would have to evaluate more colorings than its budget
/// allows. The search never reports a value it has not proven.
class BudgetExceeded : public std::runtime_error
{
  public:
    BudgetExceeded(const std::string & what, std::uint64_t budget) : std::runtime_error(what), budget_(budget) {}
    [[nodiscard]] std::uint64_t budget() const noexcept { return budget_; }

  private:
    std::uint64_t budget_;
};

struct SearchBudget
{
    static constexpr std::uint64_t default_nodes = 50'000'000;

    /// Colorings evaluated by the search (or enumerated by the counter).
    std::uint64_t max_nodes = default_nodes;
};

struct Bounds
{
    std::size_t lower = 0;
    std::size_t upper = 0;
    std::vector<std::string> provenance;
};

struct SolveResult
{
    std::size_t value = 0;
    EdgeColoring optimal_coloring;
    Certificate certificate;
    std::uint64_t nodes_explored = 0;
    Objective objective = Objective::minimize;
};

/// A global coloring property: something a whole edge coloring has or lacks,
/// plus the direction in which its color count is optimised. The search is
/// only exact for properties that survive splitting a color class (minimise)
/// or merging two classes (maximise), and that ignore color names.
class ColoringProperty
{
  public:
    virtual ~ColoringProperty() = default;

    [[nodiscard]] virtual std::string name() const = 0;
    [[nodiscard]] virtual Objective objective() const = 0;
    [[nodiscard]] virtual Bounds bounds() const = 0;
    [[nodiscard]] virtual bool holds(std::span<const Color> colors) const = 0;
    [[nodiscard]] virtual std::optional<Certificate> certify(std::span<const Color> colors) const = 0;
};

/// Pattern k-connection: k disjoint pattern paths between every pair.
std::unique_ptr<ColoringProperty> make_connection_property(const Graph & g, Pattern p, std::size_t k = 1,
                                                           DisjointMode mode = DisjointMode::edge);
/// Pattern disconnection: a pattern cut between every pair.
std::unique_ptr<ColoringProperty> make_disconnection_property(const Graph & g, Pattern p);
/// Proper edge coloring that is also rainbow connecting.
std::unique_ptr<ColoringProperty> make_proper_rainbow_property(const Graph & g);

/// Optimal number of colors over colorings of g with the property. Walks t
/// from the lower bound upward (minimise) or from the upper bound downward
/// (maximise); at each t the canonical colorings using exactly t colors are
/// tried in lexicographic order, and the first one with the property is the
/// reported optimum. K_1 has value 0.
SolveResult chromatic_number(const Graph & g, const ColoringProperty & property, SearchBudget budget = {});

SolveResult connection_number(const Graph & g, Pattern p, std::size_t k = 1, DisjointMode mode = DisjointMode::edge,
                              SearchBudget budget = {});
SolveResult disconnection_number(const Graph & g, Pattern p, SearchBudget budget = {});
SolveResult proper_rainbow_connection_number(const Graph & g, SearchBudget budget = {});

Bounds bounds(const Graph & g, Pattern p, std::size_t k = 1, DisjointMode mode = DisjointMode::edge);

enum class Task
{
    connect,
    disconnect
};

std::string_view to_string(Task t) noexcept;
Task parse_task(std::string_view text);

/// Labeled colorings in {0..t-1}^m with the property, by full enumeration.
/// Throws BudgetExceeded when t^m exceeds the budget.
std::uint64_t count_colorings(const Graph & g, Pattern p, std::size_t t, Task task, SearchBudget budget = {});

/// {graph, pattern, task, k, mode, objective, value, coloring, certificate,
/// nodes_explored}
nlohmann::ordered_json to_json(const Graph & g, const SolveResult & result, std::string_view pattern, Task task,
                               std::size_t k, DisjointMode mode);

} // namespace chroma
