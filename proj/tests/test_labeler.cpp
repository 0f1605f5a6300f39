#include <doctest.h>

#include <random>

#include "oddgrace/errors.hpp"
#include "oddgrace/labeler.hpp"
#include "oracles.hpp"

using namespace oddgrace;

namespace {

std::vector<std::vector<Label>> by_lines(const Labeling& f) {
  std::vector<std::vector<Label>> out(static_cast<std::size_t>(f.m()));
  for (std::int64_t j = 1; j <= f.m(); ++j)
    for (std::int64_t i = 1; i <= f.n(); ++i) out[static_cast<std::size_t>(j - 1)].push_back(f.at(i, j));
  return out;
}

}  // namespace

TEST_CASE("label_line_one") {
  CHECK(label_line_one(1, 3, 2) == 0);
  CHECK(label_line_one(2, 3, 2) == 4);
  CHECK(label_line_one(2, 3, 5) == 28);
  CHECK(label_line_one(3, 3, 5) == 2);
  CHECK_THROWS_AS(label_line_one(0, 3, 2), IndexError);
  CHECK_THROWS_AS(label_line_one(4, 3, 2), IndexError);
  CHECK_THROWS_AS(label_line_one(1, 1, 2), DimensionError);
}

TEST_CASE("label_line_one even rows match the m = 2 closed form 2n - i") {
  for (std::int64_t n = 2; n <= 30; ++n)
    for (std::int64_t i = 2; i <= n; i += 2) CHECK(label_line_one(i, n, 2) == 2 * n - i);
}

TEST_CASE("label_inner_line") {
  CHECK(label_inner_line(1, 2, 3, 3) == 1);
  CHECK(label_inner_line(2, 2, 3, 3) == 15);
  CHECK(label_inner_line(2, 3, 3, 5) == 20);
  CHECK(label_inner_line(3, 3, 3, 3) == 10);
  // Final line of m = 3 still comes from the odd-line formula.
  CHECK(label_inner_line(1, 3, 3, 3) == 8);

  CHECK_THROWS_AS(label_inner_line(1, 5, 3, 5), UnsupportedCase);
  CHECK_THROWS_AS(label_inner_line(1, 1, 3, 5), UnsupportedCase);
  CHECK_THROWS_AS(label_inner_line(1, 6, 3, 5), IndexError);
  CHECK_THROWS_AS(label_inner_line(4, 2, 3, 5), IndexError);
  // Even m has no override.
  CHECK_NOTHROW(label_inner_line(1, 6, 3, 6));
  CHECK_NOTHROW(label_inner_line(1, 3, 3, 3));
}

TEST_CASE("label_final_line_odd_m") {
  CHECK(label_final_line_odd_m(1, 3, 5) == 16);
  CHECK(label_final_line_odd_m(2, 3, 5) == 12);
  CHECK(label_final_line_odd_m(3, 3, 5) == 18);
  CHECK_THROWS_AS(label_final_line_odd_m(1, 3, 6), UnsupportedCase);
  CHECK_THROWS_AS(label_final_line_odd_m(1, 3, 3), UnsupportedCase);
  CHECK_THROWS_AS(label_final_line_odd_m(4, 3, 5), IndexError);
}

TEST_CASE("override takes precedence over the odd-line formula on the final line") {
  // The odd-line formula would give (j+1)(n-1) + (i-1) = 12 at (1, 5) of P_3 ^ P_5.
  CHECK(vertex_label(1, 5, 3, 5, Method::general) == 16);
}

TEST_CASE("vertex_label dispatch") {
  for (std::int64_t n = 2; n <= 6; ++n)
    for (std::int64_t m = 2; m <= 6; ++m) CHECK(vertex_label(1, 1, n, m, Method::general) == 0);
  CHECK(vertex_label(2, 5, 3, 5, Method::closed_form) == 12);
  CHECK(vertex_label(2, 5, 3, 5, Method::general) == 12);
  CHECK(vertex_label(3, 3, 3, 3, Method::general) == 10);
  CHECK_THROWS_AS(vertex_label(1, 1, 3, 7, Method::closed_form), UnsupportedCase);
  CHECK_THROWS_AS(vertex_label(1, 1, 3, 3, Method::search), UnsupportedCase);
}

TEST_CASE("full_labeling fixtures") {
  CHECK(by_lines(full_labeling(build_tensor_path_graph(3, 2))) ==
        std::vector<std::vector<Label>>{{0, 4, 2}, {1, 7, 3}});
  CHECK(by_lines(full_labeling(build_tensor_path_graph(3, 3))) ==
        std::vector<std::vector<Label>>{{0, 12, 2}, {1, 15, 3}, {8, 4, 10}});
  const std::vector<std::vector<Label>> p3p5{{0, 28, 2}, {1, 31, 3}, {8, 20, 10}, {5, 19, 7}, {16, 12, 18}};
  CHECK(by_lines(full_labeling(build_tensor_path_graph(3, 5))) == p3p5);
  CHECK(oracle::naive_odd_graceful(3, 5, oracle::from_lines(p3p5)));
  CHECK(oracle::naive_odd_graceful(3, 3, oracle::from_lines({{0, 12, 2}, {1, 15, 3}, {8, 4, 10}})));
  CHECK(oracle::naive_odd_graceful(3, 2, oracle::from_lines({{0, 4, 2}, {1, 7, 3}})));
}

TEST_CASE("full_labeling closed_form needs m in 2..6") {
  CHECK_THROWS_AS(full_labeling(build_tensor_path_graph(4, 7), Method::closed_form), UnsupportedCase);
  CHECK(full_labeling(build_tensor_path_graph(4, 6), Method::closed_form).method() == Method::closed_form);
}

TEST_CASE("closed forms agree with the general construction") {
  for (std::int64_t m = 2; m <= 6; ++m) {
    for (std::int64_t n = 3; n <= 40; ++n) {
      const auto g = build_tensor_path_graph(n, m);
      REQUIRE(full_labeling(g, Method::closed_form).labels() == full_labeling(g, Method::general).labels());
    }
  }
}

TEST_CASE("parity, extremes and determinism over the grid") {
  for (std::int64_t n = 2; n <= 40; ++n) {
    for (std::int64_t m = 2; m <= 40; ++m) {
      const auto g = build_tensor_path_graph(n, m);
      const auto f = full_labeling(g);
      for (std::int64_t j = 1; j <= m; ++j)
        for (std::int64_t i = 1; i <= n; ++i) REQUIRE((f.at(i, j) % 2 == 0) == (j % 2 == 1));
      REQUIRE(f.at(1, 1) == 0);
      REQUIRE(f.at(2, 2) == 4 * (n - 1) * (m - 1) - 1);
      REQUIRE(f == full_labeling(g));
    }
  }
}

TEST_CASE("naive oracle accepts random samples of the construction") {
  std::mt19937 rng(20261018);
  std::uniform_int_distribution<std::int64_t> pick_n(2, 12), pick_m(2, 12);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = pick_n(rng);
    const auto m = pick_m(rng);
    const auto f = full_labeling(build_tensor_path_graph(n, m));
    std::map<oracle::Cell, std::int64_t> cells;
    for (std::int64_t j = 1; j <= m; ++j)
      for (std::int64_t i = 1; i <= n; ++i) cells[{i, j}] = f.at(i, j);
    CHECK_MESSAGE(oracle::naive_odd_graceful(n, m, cells), "n=" << n << " m=" << m);
  }
}

TEST_CASE("labels overflow loudly instead of wrapping") {
  const std::int64_t big = std::int64_t{1} << 40;
  CHECK_THROWS_AS(label_line_one(2, big, big), OverflowError);
  CHECK_THROWS_AS(label_final_line_odd_m(1, big, big + 1), OverflowError);
}

TEST_CASE("Labeling construction and method names") {
  CHECK_THROWS_AS(Labeling(3, 2, Method::external, {0, 1, 2}), DimensionError);
  CHECK_THROWS_AS(Labeling(1, 2, Method::external, {0, 1}), DimensionError);
  const Labeling f(2, 2, Method::external, {0, 1, 2, 3});
  CHECK(f.at(2, 1) == 1);
  CHECK(f.at(1, 2) == 2);
  CHECK(f.with({1, 1}, 9).at(1, 1) == 9);
  CHECK_THROWS_AS(f.at(3, 1), IndexError);
  for (Method method : {Method::general, Method::closed_form, Method::search, Method::external})
    CHECK(parse_method(to_string(method)) == method);
  CHECK(parse_method("closed-form") == Method::closed_form);
  CHECK_FALSE(parse_method("magic").has_value());
}
