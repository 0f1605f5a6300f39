#pragma once

// Test-only reference computations. Nothing here calls into the library's
// labeling, edge or verification code.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

using Cell = std::pair<std::int64_t, std::int64_t>;  // (i, j)
using CellEdge = std::pair<Cell, Cell>;

/// All pairs of grid cells joined by a diagonal step, oriented j -> j+1,
/// found by testing every ordered pair.
inline std::vector<CellEdge> brute_force_edges(std::int64_t n, std::int64_t m) {
  std::vector<CellEdge> out;
  for (std::int64_t j1 = 1; j1 <= m; ++j1)
    for (std::int64_t i1 = 1; i1 <= n; ++i1)
      for (std::int64_t j2 = 1; j2 <= m; ++j2)
        for (std::int64_t i2 = 1; i2 <= n; ++i2)
          if (j2 == j1 + 1 && std::llabs(i2 - i1) == 1) out.push_back({{i1, j1}, {i2, j2}});
  return out;
}

inline std::vector<Cell> brute_force_neighbors(std::int64_t n, std::int64_t m, Cell v) {
  std::vector<Cell> out;
  for (std::int64_t j = 1; j <= m; ++j)
    for (std::int64_t i = 1; i <= n; ++i)
      if (std::llabs(i - v.first) == 1 && std::llabs(j - v.second) == 1) out.push_back({i, j});
  return out;
}

/// Odd graceful by definition: quadratic distinctness test, sorted edge list
/// compared against 1, 3, ..., 2q-1.
inline bool naive_odd_graceful(std::int64_t n, std::int64_t m, const std::map<Cell, std::int64_t>& f) {
  const auto edges = brute_force_edges(n, m);
  const auto q = static_cast<std::int64_t>(edges.size());
  std::vector<std::int64_t> values;
  for (const auto& [cell, label] : f) values.push_back(label);
  for (std::size_t a = 0; a < values.size(); ++a) {
    if (values[a] < 0 || values[a] > 2 * q - 1) return false;
    for (std::size_t b = a + 1; b < values.size(); ++b)
      if (values[a] == values[b]) return false;
  }
  std::vector<std::int64_t> induced;
  for (const auto& [u, v] : edges) induced.push_back(std::llabs(f.at(u) - f.at(v)));
  std::sort(induced.begin(), induced.end());
  for (std::int64_t k = 0; k < q; ++k)
    if (induced[static_cast<std::size_t>(k)] != 2 * k + 1) return false;
  return true;
}

/// Builds a cell map from line-major rows: table[j-1][i-1].
inline std::map<Cell, std::int64_t> from_lines(const std::vector<std::vector<std::int64_t>>& table) {
  std::map<Cell, std::int64_t> f;
  for (std::size_t j = 0; j < table.size(); ++j)
    for (std::size_t i = 0; i < table[j].size(); ++i)
      f[{static_cast<std::int64_t>(i + 1), static_cast<std::int64_t>(j + 1)}] = table[j][i];
  return f;
}

}  // namespace oracle
