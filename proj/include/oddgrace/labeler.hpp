#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "oddgrace/tensor_graph.hpp"

namespace oddgrace {

using Label = std::int64_t;

/// Where a labeling came from. `search` and `external` mark labelings
/// produced by the oracle or read from a document written elsewhere.
enum class Method { general, closed_form, search, external };

std::string_view to_string(Method method);
/// Accepts "general", "closed_form" (or "closed-form"), "search", "external".
std::optional<Method> parse_method(std::string_view text);

/// Total map from the n x m grid to labels, stored in line-major order.
class Labeling {
 public:
  /// Throws DimensionError when `labels.size() != n*m` or n, m < 2.
  Labeling(std::int64_t n, std::int64_t m, Method method, std::vector<Label> labels);

  std::int64_t n() const { return n_; }
  std::int64_t m() const { return m_; }
  Method method() const { return method_; }
  const std::vector<Label>& labels() const { return labels_; }

  Label at(GridVertex v) const;
  Label at(std::int64_t i, std::int64_t j) const { return at(GridVertex{i, j}); }

  /// Copy with one label replaced.
  Labeling with(GridVertex v, Label value) const;

  bool same_dimensions(const TensorGraph& g) const { return g.n() == n_ && g.m() == m_; }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::int64_t n_;
  std::int64_t m_;
  Method method_;
  std::vector<Label> labels_;
};

// Formulas of the three-pass construction. All arithmetic is checked and
// throws OverflowError instead of wrapping.

/// Line 1: i - 1 for odd i, 4(m-1)(n-1) - 2(n-2) - i for even i.
Label label_line_one(std::int64_t i, std::int64_t n, std::int64_t m);

/// Lines 2..m, except the final line of an odd m > 3.
///
/// Odd j >= 3: (j+1)(n-1) + (i-1) for odd i,
///             4(m - ceil(j/2))(n-1) - ((j-1)n - (j+1)) - i for even i.
/// Even j:     (j-2)(n-1) + i for odd i,
///             4(m - j/2)(n-1) - ((j-2)n - (j-1)) - i for even i.
///
/// Throws UnsupportedCase for j = 1 or for (j = m, m odd, m > 3).
Label label_inner_line(std::int64_t i, std::int64_t j, std::int64_t n, std::int64_t m);

/// Final line j = m when m is odd and m > 3:
/// (m+3)n - (m+4) + i for odd i, 4 floor(m/2)(n-1) - ((m-3)n - (m-1)) - i for even i.
Label label_final_line_odd_m(std::int64_t i, std::int64_t n, std::int64_t m);

/// Per-m closed forms for 2 <= m <= 6. Throws UnsupportedCase otherwise.
Label closed_form_label(std::int64_t i, std::int64_t j, std::int64_t n, std::int64_t m);

bool has_closed_form(std::int64_t m);

/// Dispatches to the formula for (i, j). `method` must be general or closed_form.
Label vertex_label(std::int64_t i, std::int64_t j, std::int64_t n, std::int64_t m, Method method);

Labeling full_labeling(const TensorGraph& g, Method method = Method::general);

}  // namespace oddgrace
