#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace oddgrace {

/// Vertex of P_n ^ P_m addressed by row `i` (1..n) and line `j` (1..m).
struct GridVertex {
  std::int64_t i = 1;
  std::int64_t j = 1;

  friend auto operator<=>(const GridVertex&, const GridVertex&) = default;
};

/// Edge stored in the j -> j+1 direction. `to.i` is `from.i + 1` or `from.i - 1`.
struct Edge {
  GridVertex from;
  GridVertex to;

  /// +1 when the edge climbs to row i+1, -1 when it drops to row i-1.
  int direction() const { return to.i > from.i ? +1 : -1; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// The tensor (direct) product of the paths P_n and P_m.
///
/// Vertex (i, j) is adjacent to (i +- 1, j +- 1). Vertices are indexed in
/// line-major order: all rows of line 1, then line 2, and so on. Edges are
/// kept in canonical order: ascending j, then ascending i, with the
/// (i, j)->(i+1, j+1) edge before the (i, j)->(i-1, j+1) edge.
///
/// Immutable after construction.
class TensorGraph {
 public:
  /// Throws DimensionError when n < 2 or m < 2, OverflowError when
  /// 4(n-1)(m-1) or n*m does not fit in 64 bits.
  TensorGraph(std::int64_t n, std::int64_t m);

  std::int64_t n() const { return n_; }
  std::int64_t m() const { return m_; }
  /// Edge count, 2(n-1)(m-1).
  std::int64_t q() const { return q_; }
  std::int64_t vertex_count() const { return n_ * m_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool contains(GridVertex v) const { return v.i >= 1 && v.i <= n_ && v.j >= 1 && v.j <= m_; }

  /// Line-major position of `v`. Throws IndexError when `v` is out of range.
  std::size_t index_of(GridVertex v) const;
  GridVertex vertex_at(std::size_t index) const;

  /// In-range vertices among (i-1,j-1), (i+1,j-1), (i-1,j+1), (i+1,j+1), in that order.
  std::vector<GridVertex> neighbors_of(GridVertex v) const;

  std::size_t degree(GridVertex v) const { return neighbors_of(v).size(); }

  friend bool operator==(const TensorGraph&, const TensorGraph&) = default;

 private:
  std::int64_t n_;
  std::int64_t m_;
  std::int64_t q_;
  std::vector<Edge> edges_;
};

TensorGraph build_tensor_path_graph(std::int64_t n, std::int64_t m);

/// Throws IndexError unless `v` lies in the n x m grid.
void require_in_grid(GridVertex v, std::int64_t n, std::int64_t m);

}  // namespace oddgrace
