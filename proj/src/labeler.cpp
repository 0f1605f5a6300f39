#include "oddgrace/labeler.hpp"

#include <array>
#include <string>

#include "checked_math.hpp"
#include "oddgrace/errors.hpp"

namespace oddgrace {

using detail::add;
using detail::mul;
using detail::sub;

std::string_view to_string(Method method) {
  switch (method) {
    case Method::general:
      return "general";
    case Method::closed_form:
      return "closed_form";
    case Method::search:
      return "search";
    case Method::external:
      return "external";
  }
  return "external";
}

std::optional<Method> parse_method(std::string_view text) {
  if (text == "general") return Method::general;
  if (text == "closed_form" || text == "closed-form") return Method::closed_form;
  if (text == "search") return Method::search;
  if (text == "external") return Method::external;
  return std::nullopt;
}

Labeling::Labeling(std::int64_t n, std::int64_t m, Method method, std::vector<Label> labels)
    : n_(n), m_(m), method_(method), labels_(std::move(labels)) {
  if (n < 2 || m < 2) {
    throw DimensionError("labeling dimensions must be at least 2 x 2");
  }
  if (static_cast<std::int64_t>(labels_.size()) != mul(n, m)) {
    throw DimensionError("labeling holds " + std::to_string(labels_.size()) + " labels, grid " +
                         std::to_string(n) + " x " + std::to_string(m) + " needs " +
                         std::to_string(n * m));
  }
}

Label Labeling::at(GridVertex v) const {
  require_in_grid(v, n_, m_);
  return labels_[static_cast<std::size_t>((v.j - 1) * n_ + (v.i - 1))];
}

Labeling Labeling::with(GridVertex v, Label value) const {
  require_in_grid(v, n_, m_);
  Labeling copy = *this;
  copy.labels_[static_cast<std::size_t>((v.j - 1) * n_ + (v.i - 1))] = value;
  return copy;
}

namespace {

void require_dimensions(std::int64_t n, std::int64_t m) {
  if (n < 2 || m < 2) {
    throw DimensionError("n and m must be at least 2, got n = " + std::to_string(n) +
                         ", m = " + std::to_string(m));
  }
}

void require_row(std::int64_t i, std::int64_t n) {
  if (i < 1 || i > n) {
    throw IndexError("row " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
}

void require_line(std::int64_t j, std::int64_t m) {
  if (j < 1 || j > m) {
    throw IndexError("line " + std::to_string(j) + " outside 1.." + std::to_string(m));
  }
}

bool odd(std::int64_t x) { return x % 2 != 0; }

bool final_line_override(std::int64_t j, std::int64_t m) { return j == m && odd(m) && m > 3; }

}  // namespace

Label label_line_one(std::int64_t i, std::int64_t n, std::int64_t m) {
  require_dimensions(n, m);
  require_row(i, n);
  if (odd(i)) return i - 1;
  // 4(m-1)(n-1) - 2(n-2) - i
  return sub(sub(mul(mul(4, m - 1), n - 1), mul(2, n - 2)), i);
}

Label label_inner_line(std::int64_t i, std::int64_t j, std::int64_t n, std::int64_t m) {
  require_dimensions(n, m);
  require_row(i, n);
  require_line(j, m);
  if (j == 1) throw UnsupportedCase("line 1 is labeled by label_line_one");
  if (final_line_override(j, m)) {
    throw UnsupportedCase("final line of odd m > 3 is labeled by label_final_line_odd_m");
  }
  if (odd(j)) {
    if (odd(i)) return add(mul(j + 1, n - 1), i - 1);
    const std::int64_t half_up = (j + 1) / 2;
    // 4(m - ceil(j/2))(n-1) - ((j-1)n - (j+1)) - i
    return sub(sub(mul(mul(4, m - half_up), n - 1), sub(mul(j - 1, n), j + 1)), i);
  }
  if (odd(i)) return add(mul(j - 2, n - 1), i);
  // 4(m - j/2)(n-1) - ((j-2)n - (j-1)) - i
  return sub(sub(mul(mul(4, m - j / 2), n - 1), sub(mul(j - 2, n), j - 1)), i);
}

Label label_final_line_odd_m(std::int64_t i, std::int64_t n, std::int64_t m) {
  require_dimensions(n, m);
  require_row(i, n);
  if (!odd(m) || m <= 3) {
    throw UnsupportedCase("final-line override needs odd m > 3, got m = " + std::to_string(m));
  }
  if (odd(i)) return add(sub(mul(m + 3, n), m + 4), i);
  // 4 floor(m/2)(n-1) - ((m-3)n - (m-1)) - i
  return sub(sub(mul(mul(4, m / 2), n - 1), sub(mul(m - 3, n), m - 1)), i);
}

bool has_closed_form(std::int64_t m) { return m >= 2 && m <= 6; }

namespace {

// Label a*n + b + i on odd rows and c*n + d - i on even rows.
struct LineForm {
  std::int64_t odd_coeff;
  std::int64_t odd_offset;
  std::int64_t even_coeff;
  std::int64_t even_offset;
};

// clang-format off
constexpr std::array<LineForm, 2> kPathTwo{{
    {0, -1, 2, 0},
    {0, 0, 4, -3},
}};
constexpr std::array<LineForm, 3> kPathThree{{
    {0, -1, 6, -4},
    {0, 0, 8, -7},
    {4, -5, 2, 0},
}};
constexpr std::array<LineForm, 4> kPathFour{{
    {0, -1, 10, -8},
    {0, 0, 12, -11},
    {4, -5, 6, -4},
    {2, -2, 6, -5},
}};
// Line 5's even rows are handled separately.
constexpr std::array<LineForm, 5> kPathFive{{
    {0, -1, 14, -12},
    {0, 0, 16, -15},
    {4, -5, 10, -8},
    {2, -2, 10, -9},
    {8, -9, 0, 0},
}};
constexpr std::array<LineForm, 6> kPathSix{{
    {0, -1, 18, -16},
    {0, 0, 20, -19},
    {4, -5, 14, -12},
    {2, -2, 14, -13},
    {6, -7, 8, -6},
    {4, -4, 8, -7},
}};
// clang-format on

Label evaluate(const LineForm& form, std::int64_t i, std::int64_t n) {
  if (odd(i)) return add(add(mul(form.odd_coeff, n), form.odd_offset), i);
  return sub(add(mul(form.even_coeff, n), form.even_offset), i);
}

}  // namespace

Label closed_form_label(std::int64_t i, std::int64_t j, std::int64_t n, std::int64_t m) {
  require_dimensions(n, m);
  require_row(i, n);
  require_line(j, m);
  const auto k = static_cast<std::size_t>(j - 1);
  switch (m) {
    case 2:
      return evaluate(kPathTwo[k], i, n);
    case 3:
      return evaluate(kPathThree[k], i, n);
    case 4:
      return evaluate(kPathFour[k], i, n);
    case 5:
      if (j == 5 && !odd(i)) {
        // Published as 4(r-3)(n-1) - (2n-4) - i with r left undefined; r = m.
        const std::int64_t r = m;
        return sub(sub(mul(mul(4, r - 3), n - 1), sub(mul(2, n), 4)), i);
      }
      return evaluate(kPathFive[k], i, n);
    case 6:
      return evaluate(kPathSix[k], i, n);
    default:
      throw UnsupportedCase("no closed form for m = " + std::to_string(m) + " (only 2..6)");
  }
}

Label vertex_label(std::int64_t i, std::int64_t j, std::int64_t n, std::int64_t m, Method method) {
  switch (method) {
    case Method::general:
      require_line(j, m);
      if (j == 1) return label_line_one(i, n, m);
      if (final_line_override(j, m)) return label_final_line_odd_m(i, n, m);
      return label_inner_line(i, j, n, m);
    case Method::closed_form:
      return closed_form_label(i, j, n, m);
    default:
      throw UnsupportedCase("vertex_label computes only general or closed_form labels");
  }
}

Labeling full_labeling(const TensorGraph& g, Method method) {
  if (method == Method::closed_form && !has_closed_form(g.m())) {
    throw UnsupportedCase("no closed form for m = " + std::to_string(g.m()) + " (only 2..6)");
  }
  const std::int64_t n = g.n();
  const std::int64_t m = g.m();
  std::vector<Label> labels;
  labels.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (std::int64_t j = 1; j <= m; ++j) {
    for (std::int64_t i = 1; i <= n; ++i) labels.push_back(vertex_label(i, j, n, m, method));
  }
  return Labeling(n, m, method, std::move(labels));
}

}  // namespace oddgrace
