#include "oddgrace/tensor_graph.hpp"

#include <string>

#include "checked_math.hpp"
#include "oddgrace/errors.hpp"

namespace oddgrace {

namespace {

std::string describe(GridVertex v) {
  return "(" + std::to_string(v.i) + ", " + std::to_string(v.j) + ")";
}

}  // namespace

void require_in_grid(GridVertex v, std::int64_t n, std::int64_t m) {
  if (v.i < 1 || v.i > n || v.j < 1 || v.j > m) {
    throw IndexError("vertex " + describe(v) + " outside the " + std::to_string(n) + " x " +
                     std::to_string(m) + " grid");
  }
}

TensorGraph::TensorGraph(std::int64_t n, std::int64_t m) : n_(n), m_(m) {
  if (n < 2 || m < 2) {
    throw DimensionError("P_n ^ P_m needs n >= 2 and m >= 2, got n = " + std::to_string(n) +
                         ", m = " + std::to_string(m));
  }
  // Labels go up to 2q - 1 = 4(n-1)(m-1) - 1; both that and n*m must be representable.
  detail::mul(detail::mul(4, n - 1), m - 1);
  detail::mul(n, m);
  q_ = 2 * (n - 1) * (m - 1);

  edges_.reserve(static_cast<std::size_t>(q_));
  for (std::int64_t j = 1; j < m; ++j) {
    for (std::int64_t i = 1; i <= n; ++i) {
      if (i < n) edges_.push_back({{i, j}, {i + 1, j + 1}});
      if (i > 1) edges_.push_back({{i, j}, {i - 1, j + 1}});
    }
  }
}

std::size_t TensorGraph::index_of(GridVertex v) const {
  require_in_grid(v, n_, m_);
  return static_cast<std::size_t>((v.j - 1) * n_ + (v.i - 1));
}

GridVertex TensorGraph::vertex_at(std::size_t index) const {
  const auto k = static_cast<std::int64_t>(index);
  if (k < 0 || k >= vertex_count()) {
    throw IndexError("vertex index " + std::to_string(index) + " out of range");
  }
  return {k % n_ + 1, k / n_ + 1};
}

std::vector<GridVertex> TensorGraph::neighbors_of(GridVertex v) const {
  require_in_grid(v, n_, m_);
  std::vector<GridVertex> out;
  out.reserve(4);
  for (const GridVertex c : {GridVertex{v.i - 1, v.j - 1}, GridVertex{v.i + 1, v.j - 1},
                             GridVertex{v.i - 1, v.j + 1}, GridVertex{v.i + 1, v.j + 1}}) {
    if (contains(c)) out.push_back(c);
  }
  return out;
}

TensorGraph build_tensor_path_graph(std::int64_t n, std::int64_t m) { return TensorGraph(n, m); }

}  // namespace oddgrace
