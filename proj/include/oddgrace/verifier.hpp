#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oddgrace/labeler.hpp"
#include "oddgrace/tensor_graph.hpp"

namespace oddgrace {

inline constexpr const char* kLabelRange = "label-range";
inline constexpr const char* kVertexInjectivity = "vertex-injectivity";
inline constexpr const char* kEdgeOddCoverage = "edge-odd-coverage";
inline constexpr const char* kParityStructure = "parity-structure";
inline constexpr const char* kExtremes = "extremes";

struct CheckResult {
  std::string name;
  bool passed = false;
  /// Advisory checks are reported but do not affect VerificationReport::passed.
  bool advisory = false;
  std::string detail;
};

/// Offending vertices or edge for one failed check.
struct Witness {
  std::string check;
  std::vector<GridVertex> vertices;
  std::optional<Edge> edge;
  std::optional<Label> value;
  std::string note;
};

struct VerificationReport {
  bool passed = false;
  std::int64_t q = 0;
  std::vector<CheckResult> checks;
  std::vector<Witness> witnesses;

  const CheckResult* find(const std::string& name) const;
};

/// Decides whether `f` is an odd graceful labeling of `g`: labels distinct
/// and in [0, 2q-1], induced edge labels exactly {1, 3, ..., 2q-1}.
///
/// Throws DimensionError when `f` was built for another grid. Witness lists
/// are capped per check so the report stays O(q).
VerificationReport verify_odd_graceful(const TensorGraph& g, const Labeling& f);

}  // namespace oddgrace
