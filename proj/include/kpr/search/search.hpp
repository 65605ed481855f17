#pragma once

#include "kpr/colorings/coloring.hpp"
#include "kpr/systems/equation.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace kpr {

struct SearchBudget {
  std::uint64_t range_n = 100;
  std::uint64_t node_limit = 100'000'000;
  double time_hint = 0;  // advisory seconds, not enforced
  unsigned workers = 1;

  /// Throws std::invalid_argument unless range_n, node_limit, workers > 0.
  void validate() const;
};

enum class SearchStatus { Found, NoneInRange, BudgetExhausted };
std::string to_string(SearchStatus s);

struct SolutionRecord {
  std::string system;
  std::vector<std::string> variables;
  std::vector<std::int64_t> values;  // declared variable order
  std::uint32_t color = 0;

  [[nodiscard]] ConstructionAssignment assignment() const;
  friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::NoneInRange;
  std::optional<SolutionRecord> solution;
  std::uint64_t nodes = 0;
};

/// Depth-first assignment of the variables in declared order over one color
/// class at a time (classes in increasing color). An equation whose last
/// declared variable is linear in it solves for that variable directly.
/// Returns the lexicographically least solution in the least color class
/// that has one. The node limit applies to each class separately so the
/// answer does not depend on budget.workers.
SearchOutcome find_mono_solution(const EquationSystem& sys, const Coloring& c, const SearchBudget& budget);

/// Same engine with colors ignored: calls visit(values) for every solution
/// in [1..n] in lexicographic order until it returns false. Returns
/// Found when the enumeration completed or was stopped by visit, and
/// BudgetExhausted when the node limit cut it short.
SearchStatus enumerate_solutions(const EquationSystem& sys, std::uint64_t n, std::uint64_t node_limit,
                                 const std::function<bool(const std::vector<std::int64_t>&)>& visit);

/// Independent recheck: exact residuals, positivity, range, one color,
/// distinctness policy and nonzero side conditions.
bool validate_solution(const EquationSystem& sys, const Coloring& c, const SolutionRecord& rec);

/// Distinct value sets of the solutions in [1..n], each sorted ascending,
/// sorted by (max, lexicographic). Sets that are supersets of another set
/// are kept; callers only need monochromaticity.
struct SolutionSets {
  std::vector<std::vector<std::uint64_t>> sets;
  bool truncated = false;  // node or tuple cap reached
};
SolutionSets solution_value_sets(const EquationSystem& sys, std::uint64_t n, std::uint64_t node_limit,
                                 std::uint64_t max_sets = UINT64_MAX);

struct AvoidResult {
  SearchStatus status = SearchStatus::NoneInRange;  // Found: avoider covers [1..n]
  std::optional<Coloring> best;                      // longest avoiding prefix seen
  std::uint64_t nodes = 0;
};

/// Canonical backtracking (color of 1 is 0, new colors in order) for an
/// r-coloring of [1..n] leaving every set non-monochromatic.
AvoidResult find_avoiding_coloring(const std::vector<std::vector<std::uint64_t>>& sets, std::uint64_t n, unsigned r,
                                   std::uint64_t node_limit);

struct RadoNumberResult {
  std::string system;
  unsigned r = 0;
  std::optional<std::uint64_t> value;
  std::optional<Coloring> avoider;  // of [1..value-1], or the longest found
  SearchStatus status = SearchStatus::Found;
  std::uint64_t nodes = 0;
};

/// Least N such that every r-coloring of [1..N] has a monochromatic
/// solution, searched up to budget.range_n. NoneInRange means an avoider of
/// the whole range exists; BudgetExhausted means the search was cut short.
RadoNumberResult rado_number(const EquationSystem& sys, unsigned r, const SearchBudget& budget);

struct CnfInstance {
  std::uint64_t num_vars = 0;
  std::vector<std::vector<std::int64_t>> clauses;
  bool truncated = false;
  std::vector<std::string> comments;

  /// DIMACS text: comment lines, "p cnf V C", clauses ending in 0.
  [[nodiscard]] std::string str() const;
};

/// Variable v(n, c) = (n - 1) * r + c + 1 means "n has color c". Clauses: at
/// least one color per n, at most one (pairwise), and for each solution
/// value set and each color, some element avoids that color. Satisfiable
/// iff an avoiding r-coloring of [1..n] exists (unless truncated).
CnfInstance export_cnf(const EquationSystem& sys, unsigned r, std::uint64_t n, std::uint64_t node_limit = 100'000'000,
                       std::uint64_t max_sets = 2'000'000);

/// Throws std::invalid_argument on malformed DIMACS text.
CnfInstance parse_dimacs(std::string_view text);

/// Plain DPLL with unit propagation. Returns a model (index v-1 -> value)
/// or nothing when unsatisfiable.
std::optional<std::vector<bool>> dpll_solve(const CnfInstance& cnf);

}  // namespace kpr
