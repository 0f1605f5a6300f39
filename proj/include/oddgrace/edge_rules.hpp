#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "oddgrace/labeler.hpp"
#include "oddgrace/tensor_graph.hpp"

namespace oddgrace {

/// Induced edge labels |f(u) - f(v)|, one per edge, in canonical edge order.
struct EdgeLabeling {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::vector<Edge> edges;
  std::vector<Label> labels;

  friend bool operator==(const EdgeLabeling&, const EdgeLabeling&) = default;
};

/// Throws DimensionError when `f` was built for another grid.
EdgeLabeling induce_edge_labels(const TensorGraph& g, const Labeling& f);

/// Which closed-form edge rule a prediction came from.
enum class PredictionRule {
  first_gap,   // between lines 1 and 2
  inner_gap,   // between lines j and j+1, 2 <= j <= m-2 (or m-1 outside the odd-m override)
  final_gap,   // between lines m-1 and m when m is odd and m > 3
};

std::string_view to_string(PredictionRule rule);

struct EdgePrediction {
  Edge edge;
  /// Empty when the rule lists no formula for this parity case.
  std::optional<Label> predicted;
  PredictionRule rule;

  bool covered() const { return predicted.has_value(); }
};

/// True when the edge from row i in direction `direction` would leave the grid.
bool is_muffled(std::int64_t i, std::int64_t n, int direction);

/// Closed-form label of the edge (i, j) -> (i + direction, j + 1).
///
/// Throws UnsupportedCase for muffled edges, IndexError for j outside
/// 1..m-1 or i outside 1..n, and DimensionError for n or m below 2.
EdgePrediction predict_edge_label(std::int64_t i, std::int64_t j, std::int64_t n, std::int64_t m,
                                  int direction);

struct PredictionMismatch {
  Edge edge;
  Label predicted;
  Label induced;
  PredictionRule rule;
};

/// Predicted-versus-induced comparison over every edge of a graph.
struct PredictionCrossCheck {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t covered = 0;
  std::int64_t not_covered = 0;
  /// Edges predicted by the final-gap rule while n is even; the correctness
  /// argument only claims that rule for odd n.
  std::int64_t final_gap_even_n = 0;
  std::vector<PredictionMismatch> mismatches;

  bool agrees() const { return mismatches.empty(); }
};

PredictionCrossCheck cross_check_predictions(const TensorGraph& g, const Labeling& f);

}  // namespace oddgrace
