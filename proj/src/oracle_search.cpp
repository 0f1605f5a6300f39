#include "oddgrace/oracle_search.hpp"

#include <algorithm>
#include <array>

#include "oddgrace/errors.hpp"

namespace oddgrace {

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::exhausted_none:
      return "exhausted-none";
    case SearchStatus::budget_exceeded:
      return "budget-exceeded";
  }
  return "exhausted-none";
}

namespace {

class Backtracker {
 public:
  Backtracker(const TensorGraph& g, const SearchBudget& budget)
      : g_(g),
        budget_(budget),
        top_(2 * g.q() - 1),
        labels_(static_cast<std::size_t>(g.vertex_count()), -1),
        vertex_used_(static_cast<std::size_t>(2 * g.q()), false),
        edge_used_(static_cast<std::size_t>(g.q()), false) {
    // Earlier neighbors of each vertex in line-major order sit on the previous line.
    back_neighbors_.resize(labels_.size());
    for (std::size_t k = 0; k < labels_.size(); ++k) {
      const GridVertex v = g.vertex_at(k);
      for (const GridVertex u : g.neighbors_of(v)) {
        if (u.j < v.j) back_neighbors_[k].push_back(g.index_of(u));
      }
    }
  }

  SearchOutcome run() {
    descend(0);
    SearchOutcome out;
    out.nodes_expanded = nodes_;
    out.labelings = std::move(found_);
    if (out_of_budget_) {
      out.status = SearchStatus::budget_exceeded;
    } else {
      out.status = out.labelings.empty() ? SearchStatus::exhausted_none : SearchStatus::found;
    }
    return out;
  }

 private:
  // Returns true when the search should stop.
  bool descend(std::size_t k) {
    if (k == labels_.size()) {
      found_.emplace_back(g_.n(), g_.m(), Method::search, labels_);
      return !budget_.find_all;
    }
    const Label last = (k == 0 && budget_.fix_zero) ? 0 : top_;
    for (Label c = 0; c <= last; ++c) {
      if (vertex_used_[static_cast<std::size_t>(c)]) continue;
      if (!edges_fit(k, c)) continue;
      if (nodes_ == budget_.max_nodes) {
        out_of_budget_ = true;
        return true;
      }
      ++nodes_;
      assign(k, c, true);
      const bool stop = descend(k + 1);
      assign(k, c, false);
      if (stop) return true;
    }
    return false;
  }

  bool edges_fit(std::size_t k, Label c) {
    // Distinct back-neighbors need distinct edge labels too.
    std::size_t seen_count = 0;
    std::array<Label, 2> seen{};
    for (const std::size_t u : back_neighbors_[k]) {
      const Label d = c > labels_[u] ? c - labels_[u] : labels_[u] - c;
      if (d % 2 == 0 || edge_used_[static_cast<std::size_t>((d - 1) / 2)]) return false;
      for (std::size_t s = 0; s < seen_count; ++s) {
        if (seen[s] == d) return false;
      }
      seen[seen_count++] = d;
    }
    return true;
  }

  void assign(std::size_t k, Label c, bool on) {
    labels_[k] = on ? c : -1;
    vertex_used_[static_cast<std::size_t>(c)] = on;
    for (const std::size_t u : back_neighbors_[k]) {
      const Label d = c > labels_[u] ? c - labels_[u] : labels_[u] - c;
      edge_used_[static_cast<std::size_t>((d - 1) / 2)] = on;
    }
  }

  const TensorGraph& g_;
  SearchBudget budget_;
  Label top_;
  std::vector<Label> labels_;
  std::vector<bool> vertex_used_;
  std::vector<bool> edge_used_;
  std::vector<std::vector<std::size_t>> back_neighbors_;
  std::vector<Labeling> found_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
};

}  // namespace

SearchOutcome search_odd_graceful(const TensorGraph& g, const SearchBudget& budget) {
  if (budget.max_nodes == 0) throw UnsupportedCase("search budget must allow at least one node");
  SearchOutcome out = Backtracker(g, budget).run();
  if (g.q() > kSearchSoftEdgeLimit) {
    out.warnings.push_back("q = " + std::to_string(g.q()) + " exceeds " +
                           std::to_string(kSearchSoftEdgeLimit) +
                           "; exhaustive search is unlikely to finish");
  }
  for (const Labeling& f : out.labelings) {
    if (!verify_odd_graceful(g, f).passed) {
      throw Error("search produced a labeling the verifier rejects");
    }
  }
  return out;
}

CrossValidation cross_validate(std::int64_t n, std::int64_t m, const SearchBudget& budget) {
  const TensorGraph g(n, m);
  CrossValidation out;
  out.n = n;
  out.m = m;
  const Labeling constructive = full_labeling(g, Method::general);
  out.constructive_report = verify_odd_graceful(g, constructive);
  out.constructive_valid = out.constructive_report.passed;
  if (n < 3) {
    out.notes.push_back("n = " + std::to_string(n) +
                        " lies outside the n > 2 range the construction is stated for");
  }

  const SearchOutcome oracle = search_odd_graceful(g, budget);
  out.oracle_status = oracle.status;
  out.oracle_nodes = oracle.nodes_expanded;
  out.oracle_labelings = oracle.labelings.size();
  out.notes.insert(out.notes.end(), oracle.warnings.begin(), oracle.warnings.end());

  if (budget.find_all && oracle.status != SearchStatus::budget_exceeded) {
    out.constructive_reproduced =
        std::any_of(oracle.labelings.begin(), oracle.labelings.end(),
                    [&](const Labeling& f) { return f.labels() == constructive.labels(); });
    if (budget.fix_zero) {
      out.notes.push_back("fix_zero pins f(1,1) = 0, so the enumeration covers that half only");
    }
  }
  return out;
}

}  // namespace oddgrace
