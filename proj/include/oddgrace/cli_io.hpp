#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oddgrace/edge_rules.hpp"
#include "oddgrace/labeler.hpp"
#include "oddgrace/oracle_search.hpp"
#include "oddgrace/tensor_graph.hpp"
#include "oddgrace/verifier.hpp"

namespace oddgrace {

// Labeling documents are JSON objects with fields n, m, method, vertices and
// (optionally) edges, always in that order:
//
//   {"n": 3, "m": 2, "method": "general",
//    "vertices": [{"i": 1, "j": 1, "label": 0}, ...],
//    "edges": [{"from": [1, 1], "to": [2, 2], "label": 7}, ...]}
//
// Vertices are line-major, edges canonical, indices 1-based.

/// Canonical text form; identical inputs give identical bytes.
std::string serialize_labeling(const Labeling& f, bool include_edges = false);

/// Throws ParseError for malformed JSON or wrong field types (the message
/// names the line or field) and DocumentError when the vertices do not cover
/// the grid exactly once or listed edges disagree with the labeling.
Labeling parse_labeling(std::string_view text);

enum class ExportFormat { dot, csv };

std::optional<ExportFormat> parse_export_format(std::string_view text);

/// Graphviz DOT or edge-list CSV (`i1,j1,i2,j2,fu,fv,edge_label`). Label
/// columns are empty when no labeling is given.
std::string export_graph(const TensorGraph& g, const Labeling* f, ExportFormat format);

/// Inclusive integer range; empty when first > last.
struct IntRange {
  std::int64_t first = 0;
  std::int64_t last = -1;

  bool empty() const { return first > last; }
};

/// Parses "A..B" or a single "A". Throws ParseError.
IntRange parse_range(std::string_view text);

struct SweepEntry {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t q = 0;
  bool passed = false;
  /// For closed_form sweeps: whether every label equals the general method's.
  std::optional<bool> matches_general;
  std::vector<std::string> failed_checks;
};

struct SweepReport {
  std::string method;
  std::vector<SweepEntry> entries;  // sorted by (n, m)
  std::size_t failures = 0;
  double wall_seconds = 0.0;

  bool passed() const { return failures == 0; }
};

/// Labels and verifies every (n, m) in the ranges. Failures are collected,
/// not fatal. `threads` = 0 picks the hardware concurrency.
///
/// Throws DimensionError for ranges reaching below 2 and UnsupportedCase for
/// closed_form over m outside 2..6.
SweepReport run_sweep(IntRange n_range, IntRange m_range, Method method, unsigned threads = 0);

std::string serialize_report(const VerificationReport& report);
std::string serialize_search(const TensorGraph& g, const SearchOutcome& outcome);
std::string serialize_cross_validation(const CrossValidation& cv);
std::string serialize_prediction_check(const PredictionCrossCheck& check);
/// Sweep report document; set `include_time` false for reproducible output.
std::string serialize_sweep(const SweepReport& report, bool include_time = true);

}  // namespace oddgrace
