#include "oddgrace/verifier.hpp"

#include <algorithm>
#include <utility>

#include "oddgrace/errors.hpp"

namespace oddgrace {

namespace {

constexpr std::size_t kWitnessCap = 16;

class WitnessSink {
 public:
  WitnessSink(std::vector<Witness>& out, std::string check) : out_(out), check_(std::move(check)) {}

  void add(Witness w) {
    ++count_;
    if (kept_ >= kWitnessCap) return;
    w.check = check_;
    out_.push_back(std::move(w));
    ++kept_;
  }

  std::size_t count() const { return count_; }

 private:
  std::vector<Witness>& out_;
  std::string check_;
  std::size_t count_ = 0;
  std::size_t kept_ = 0;
};

std::string plural(std::size_t k, const char* what) {
  return std::to_string(k) + " " + what + (k == 1 ? "" : "s");
}

}  // namespace

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerificationReport verify_odd_graceful(const TensorGraph& g, const Labeling& f) {
  if (!f.same_dimensions(g)) {
    throw DimensionError("labeling is " + std::to_string(f.n()) + " x " + std::to_string(f.m()) +
                         ", graph is " + std::to_string(g.n()) + " x " + std::to_string(g.m()));
  }
  VerificationReport report;
  report.q = g.q();
  const std::int64_t top = 2 * g.q() - 1;
  const auto& labels = f.labels();

  // label-range
  {
    WitnessSink sink(report.witnesses, kLabelRange);
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (labels[k] < 0 || labels[k] > top) {
        sink.add({{}, {g.vertex_at(k)}, std::nullopt, labels[k], "outside [0, 2q-1]"});
      }
    }
    report.checks.push_back({kLabelRange, sink.count() == 0, false,
                             sink.count() == 0 ? "all labels in [0, " + std::to_string(top) + "]"
                                               : plural(sink.count(), "label") + " out of range"});
  }

  // vertex-injectivity
  {
    WitnessSink sink(report.witnesses, kVertexInjectivity);
    std::vector<std::pair<Label, std::size_t>> sorted;
    sorted.reserve(labels.size());
    for (std::size_t k = 0; k < labels.size(); ++k) sorted.emplace_back(labels[k], k);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size();) {
      std::size_t end = k + 1;
      while (end < sorted.size() && sorted[end].first == sorted[k].first) ++end;
      if (end - k > 1) {
        Witness w{{}, {}, std::nullopt, sorted[k].first, "label shared by several vertices"};
        for (std::size_t t = k; t < end; ++t) w.vertices.push_back(g.vertex_at(sorted[t].second));
        sink.add(std::move(w));
      }
      k = end;
    }
    report.checks.push_back({kVertexInjectivity, sink.count() == 0, false,
                             sink.count() == 0 ? "labels pairwise distinct"
                                               : plural(sink.count(), "duplicated label")});
  }

  // edge-odd-coverage: slot (d-1)/2 records the first edge carrying odd label d.
  {
    WitnessSink sink(report.witnesses, kEdgeOddCoverage);
    constexpr std::size_t kEmpty = static_cast<std::size_t>(-1);
    std::vector<std::size_t> holder(static_cast<std::size_t>(g.q()), kEmpty);
    const auto& edges = g.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const Label a = labels[g.index_of(edges[k].from)];
      const Label b = labels[g.index_of(edges[k].to)];
      // Out-of-range labels are already reported; keep the subtraction in range.
      if (a < 0 || b < 0 || a > top || b > top) {
        sink.add({{}, {}, edges[k], std::nullopt, "endpoint label out of range"});
        continue;
      }
      const Label d = a > b ? a - b : b - a;
      if (d % 2 == 0) {
        sink.add({{}, {}, edges[k], d, d == 0 ? "zero edge label" : "even edge label"});
        continue;
      }
      auto& slot = holder[static_cast<std::size_t>((d - 1) / 2)];
      if (slot != kEmpty) {
        sink.add({{}, {edges[slot].from, edges[slot].to}, edges[k], d,
                  "edge label already used by the listed edge"});
        continue;
      }
      slot = k;
    }
    std::size_t missing = 0;
    for (std::size_t s = 0; s < holder.size(); ++s) {
      if (holder[s] == kEmpty) {
        ++missing;
        sink.add({{}, {}, std::nullopt, static_cast<Label>(2 * s + 1), "odd edge label never induced"});
      }
    }
    const bool ok = sink.count() == 0;
    report.checks.push_back(
        {kEdgeOddCoverage, ok, false,
         ok ? "edge labels are exactly {1, 3, ..., " + std::to_string(top) + "}"
            : plural(sink.count() - missing, "bad edge") + ", " +
                  plural(missing, "missing odd label")});
  }

  // parity-structure (advisory): even labels on odd lines, odd labels on even lines.
  {
    WitnessSink sink(report.witnesses, kParityStructure);
    for (std::size_t k = 0; k < labels.size(); ++k) {
      const GridVertex v = g.vertex_at(k);
      const bool want_even = v.j % 2 != 0;
      if ((labels[k] % 2 == 0) != want_even) {
        sink.add({{}, {v}, std::nullopt, labels[k],
                  want_even ? "odd label on odd line" : "even label on even line"});
      }
    }
    report.checks.push_back({kParityStructure, sink.count() == 0, true,
                             sink.count() == 0 ? "odd lines even, even lines odd"
                                               : plural(sink.count(), "vertex") + " off parity"});
  }

  // extremes (advisory): f(1,1) = 0 and f(2,2) = 2q-1.
  {
    WitnessSink sink(report.witnesses, kExtremes);
    const Label low = f.at(1, 1);
    const Label high = f.at(2, 2);
    if (low != 0) sink.add({{}, {{1, 1}}, std::nullopt, low, "expected 0"});
    if (high != top) sink.add({{}, {{2, 2}}, std::nullopt, high, "expected 2q-1"});
    report.checks.push_back({kExtremes, sink.count() == 0, true,
                             "f(1,1) = " + std::to_string(low) + ", f(2,2) = " +
                                 std::to_string(high) + ", 2q-1 = " + std::to_string(top)});
  }

  report.passed = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const CheckResult& c) { return c.advisory || c.passed; });
  return report;
}

}  // namespace oddgrace
