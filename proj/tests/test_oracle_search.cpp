#include <doctest.h>

#include <set>

#include "oddgrace/errors.hpp"
#include "oddgrace/oracle_search.hpp"
#include "oracles.hpp"

using namespace oddgrace;

namespace {

std::map<oracle::Cell, std::int64_t> cells_of(const TensorGraph& g, const Labeling& f) {
  std::map<oracle::Cell, std::int64_t> out;
  for (std::size_t k = 0; k < f.labels().size(); ++k) {
    const auto v = g.vertex_at(k);
    out[{v.i, v.j}] = f.labels()[k];
  }
  return out;
}

}  // namespace

TEST_CASE("first labeling of P_3 ^ P_2") {
  const auto g = build_tensor_path_graph(3, 2);
  const auto out = search_odd_graceful(g, {});
  REQUIRE(out.status == SearchStatus::found);
  REQUIRE(out.labelings.size() == 1);
  CHECK(out.labelings[0].method() == Method::search);
  CHECK(verify_odd_graceful(g, out.labelings[0]).passed);
  CHECK(oracle::naive_odd_graceful(3, 2, cells_of(g, out.labelings[0])));
  CHECK(out.warnings.empty());
}

TEST_CASE("first labeling of P_2 ^ P_2") {
  const auto g = build_tensor_path_graph(2, 2);
  const auto out = search_odd_graceful(g, {});
  REQUIRE(out.status == SearchStatus::found);
  CHECK(verify_odd_graceful(g, out.labelings[0]).passed);
}

TEST_CASE("budget of one node is exceeded") {
  const auto out = search_odd_graceful(build_tensor_path_graph(3, 2), {1, false, false});
  CHECK(out.status == SearchStatus::budget_exceeded);
  CHECK(out.nodes_expanded == 1);
  CHECK(out.labelings.empty());
  CHECK_THROWS_AS(search_odd_graceful(build_tensor_path_graph(3, 2), {0, false, false}), UnsupportedCase);
}

TEST_CASE("enumeration of P_2 ^ P_2 matches a brute-force count") {
  // Independent count: every map of 4 vertices into [0, 3] tested against the definition.
  std::size_t expected = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d)
          if (oracle::naive_odd_graceful(2, 2, oracle::from_lines({{a, b}, {c, d}}))) ++expected;
  const auto out = search_odd_graceful(build_tensor_path_graph(2, 2), {1'000'000, true, false});
  CHECK(out.status == SearchStatus::found);
  CHECK(out.labelings.size() == expected);
  CHECK(expected > 0);
}

TEST_CASE("enumeration of P_3 ^ P_2 matches a brute-force count and contains the construction") {
  std::size_t expected = 0;
  std::vector<std::int64_t> x(6, 0);
  for (std::int64_t code = 0; code < 8 * 8 * 8 * 8 * 8 * 8; ++code) {
    std::int64_t c = code;
    for (auto& v : x) {
      v = c % 8;
      c /= 8;
    }
    if (oracle::naive_odd_graceful(3, 2, oracle::from_lines({{x[0], x[1], x[2]}, {x[3], x[4], x[5]}}))) ++expected;
  }
  const auto g = build_tensor_path_graph(3, 2);
  const auto out = search_odd_graceful(g, {10'000'000, true, false});
  REQUIRE(out.status == SearchStatus::found);
  CHECK(out.labelings.size() == expected);
  std::set<std::vector<Label>> distinct;
  for (const auto& f : out.labelings) distinct.insert(f.labels());
  CHECK(distinct.size() == out.labelings.size());
  CHECK(distinct.count(full_labeling(g).labels()) == 1);
}

TEST_CASE("fix_zero restricts the first vertex") {
  const auto g = build_tensor_path_graph(3, 2);
  const auto all = search_odd_graceful(g, {10'000'000, true, false});
  const auto pinned = search_odd_graceful(g, {10'000'000, true, true});
  REQUIRE(pinned.status == SearchStatus::found);
  CHECK(pinned.labelings.size() < all.labelings.size());
  for (const auto& f : pinned.labelings) CHECK(f.at(1, 1) == 0);
}

TEST_CASE("P_3 ^ P_3 is found within budget") {
  const auto g = build_tensor_path_graph(3, 3);
  const auto out = search_odd_graceful(g, {10'000'000, false, false});
  REQUIRE(out.status == SearchStatus::found);
  CHECK(verify_odd_graceful(g, out.labelings[0]).passed);
}

TEST_CASE("large graphs get a soft warning") {
  const auto out = search_odd_graceful(build_tensor_path_graph(4, 5), {50, false, false});
  CHECK(out.status == SearchStatus::budget_exceeded);
  CHECK(out.warnings.size() == 1);
}

TEST_CASE("cross_validate") {
  const auto a = cross_validate(3, 2, {10'000'000, true, false});
  CHECK(a.constructive_valid);
  CHECK(a.oracle_status == SearchStatus::found);
  REQUIRE(a.constructive_reproduced.has_value());
  CHECK(*a.constructive_reproduced);

  const auto b = cross_validate(3, 3, {10'000'000, false, false});
  CHECK(b.constructive_valid);
  CHECK(b.oracle_status == SearchStatus::found);
  CHECK_FALSE(b.constructive_reproduced.has_value());
  CHECK(b.notes.empty());

  const auto c = cross_validate(2, 2, {});
  CHECK(c.constructive_valid);
  CHECK(c.oracle_status == SearchStatus::found);
  REQUIRE(c.notes.size() == 1);
  CHECK(c.notes[0].find("n > 2") != std::string::npos);
}
