#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oddgrace/labeler.hpp"
#include "oddgrace/tensor_graph.hpp"
#include "oddgrace/verifier.hpp"

namespace oddgrace {

struct SearchBudget {
  /// Maximum number of accepted label assignments. Must be at least 1.
  std::uint64_t max_nodes = 10'000'000;
  /// Enumerate every labeling instead of stopping at the first.
  bool find_all = false;
  /// Pin f(1,1) = 0. Breaks the f -> 2q-1-f symmetry, so enumeration is no
  /// longer complete.
  bool fix_zero = false;
};

enum class SearchStatus { found, exhausted_none, budget_exceeded };

std::string_view to_string(SearchStatus status);

struct SearchOutcome {
  SearchStatus status = SearchStatus::exhausted_none;
  /// Every entry passed verify_odd_graceful. May be non-empty with
  /// budget_exceeded when find_all ran out of budget.
  std::vector<Labeling> labelings;
  std::uint64_t nodes_expanded = 0;
  std::vector<std::string> warnings;
};

/// Graphs with more edges than this get a soft warning in the outcome.
inline constexpr std::int64_t kSearchSoftEdgeLimit = 20;

/// Depth-first search for odd graceful labelings, vertices in line-major
/// order, candidate labels ascending. A branch is pruned as soon as it
/// repeats a vertex label or induces an even or repeated edge label.
///
/// Never consults the constructive formulas. Throws UnsupportedCase when
/// budget.max_nodes is 0.
SearchOutcome search_odd_graceful(const TensorGraph& g, const SearchBudget& budget);

struct CrossValidation {
  std::int64_t n = 0;
  std::int64_t m = 0;
  bool constructive_valid = false;
  VerificationReport constructive_report;
  SearchStatus oracle_status = SearchStatus::exhausted_none;
  std::uint64_t oracle_nodes = 0;
  std::size_t oracle_labelings = 0;
  /// Set only when find_all enumerated the whole tree.
  std::optional<bool> constructive_reproduced;
  std::vector<std::string> notes;
};

/// Labels (n, m) with the general method, verifies it, then runs the oracle.
CrossValidation cross_validate(std::int64_t n, std::int64_t m, const SearchBudget& budget);

}  // namespace oddgrace
