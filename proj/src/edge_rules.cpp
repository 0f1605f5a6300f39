#include "oddgrace/edge_rules.hpp"

#include <string>

#include "checked_math.hpp"
#include "oddgrace/errors.hpp"

namespace oddgrace {

using detail::mul;
using detail::sub;

EdgeLabeling induce_edge_labels(const TensorGraph& g, const Labeling& f) {
  if (!f.same_dimensions(g)) {
    throw DimensionError("labeling is " + std::to_string(f.n()) + " x " + std::to_string(f.m()) +
                         ", graph is " + std::to_string(g.n()) + " x " + std::to_string(g.m()));
  }
  EdgeLabeling out{g.n(), g.m(), g.edges(), {}};
  out.labels.reserve(g.edges().size());
  const auto& labels = f.labels();
  for (const Edge& e : g.edges()) {
    const Label a = labels[g.index_of(e.from)];
    const Label b = labels[g.index_of(e.to)];
    out.labels.push_back(a > b ? sub(a, b) : sub(b, a));
  }
  return out;
}

std::string_view to_string(PredictionRule rule) {
  switch (rule) {
    case PredictionRule::first_gap:
      return "first_gap";
    case PredictionRule::inner_gap:
      return "inner_gap";
    case PredictionRule::final_gap:
      return "final_gap";
  }
  return "inner_gap";
}

bool is_muffled(std::int64_t i, std::int64_t n, int direction) {
  return (direction == +1 && i == n) || (direction == -1 && i == 1);
}

namespace {

bool odd(std::int64_t x) { return x % 2 != 0; }

}  // namespace

EdgePrediction predict_edge_label(std::int64_t i, std::int64_t j, std::int64_t n, std::int64_t m,
                                  int direction) {
  if (n < 2 || m < 2) throw DimensionError("n and m must be at least 2");
  if (direction != 1 && direction != -1) throw UnsupportedCase("direction must be +1 or -1");
  if (j < 1 || j > m - 1) {
    throw IndexError("edge line " + std::to_string(j) + " outside 1.." + std::to_string(m - 1));
  }
  if (i < 1 || i > n) throw IndexError("row " + std::to_string(i) + " outside 1.." + std::to_string(n));
  if (is_muffled(i, n, direction)) {
    throw UnsupportedCase("edge from row " + std::to_string(i) + " in direction " +
                          std::to_string(direction) + " leaves the grid (muffled)");
  }

  const Edge edge{{i, j}, {i + direction, j + 1}};
  const bool up = direction == +1;
  // (2i - 1) for the upward edge, (2i - 3) for the downward one.
  const std::int64_t row_term = up ? sub(mul(2, i), 1) : sub(mul(2, i), 3);

  if (j == 1) {
    const std::int64_t top = mul(mul(4, m - 1), n - 1);
    if (odd(i)) return {edge, sub(top, row_term), PredictionRule::first_gap};
    if (up) return {edge, std::nullopt, PredictionRule::first_gap};
    return {edge, sub(sub(top, mul(2, n - 2)), sub(mul(2, i), 1)), PredictionRule::first_gap};
  }

  if (j == m - 1 && odd(m) && m > 3) {
    Label value;
    if (odd(i)) {
      value = up ? sub(sub(mul(4, n), mul(2, i)), 3) : sub(mul(4, n - 1), sub(mul(2, i), 3));
    } else {
      value = up ? sub(sub(mul(2, n), mul(2, i)), 1) : sub(mul(2, n), sub(mul(2, i), 1));
    }
    return {edge, value, PredictionRule::final_gap};
  }

  if (odd(i) && odd(j)) {
    return {edge, sub(mul(mul(2, 2 * m - 2 * j - 1), n - 1), row_term), PredictionRule::inner_gap};
  }
  if (!odd(i) && !odd(j)) {
    return {edge, sub(mul(mul(4, m - j), n - 1), row_term), PredictionRule::inner_gap};
  }
  return {edge, std::nullopt, PredictionRule::inner_gap};
}

PredictionCrossCheck cross_check_predictions(const TensorGraph& g, const Labeling& f) {
  const EdgeLabeling induced = induce_edge_labels(g, f);
  PredictionCrossCheck out;
  out.n = g.n();
  out.m = g.m();
  for (std::size_t k = 0; k < induced.edges.size(); ++k) {
    const Edge& e = induced.edges[k];
    const EdgePrediction p = predict_edge_label(e.from.i, e.from.j, g.n(), g.m(), e.direction());
    if (!p.covered()) {
      ++out.not_covered;
      continue;
    }
    ++out.covered;
    if (p.rule == PredictionRule::final_gap && !odd(g.n())) ++out.final_gap_even_n;
    if (*p.predicted != induced.labels[k]) {
      out.mismatches.push_back({e, *p.predicted, induced.labels[k], p.rule});
    }
  }
  return out;
}

}  // namespace oddgrace
