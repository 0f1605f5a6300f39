#include "oddgrace/cli_io.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <limits>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "oddgrace/errors.hpp"

namespace oddgrace {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string vertex_json(GridVertex v) {
  return "[" + std::to_string(v.i) + ", " + std::to_string(v.j) + "]";
}

}  // namespace

std::string serialize_labeling(const Labeling& f, bool include_edges) {
  const TensorGraph g(f.n(), f.m());
  std::ostringstream out;
  out << "{\n";
  out << "  \"n\": " << f.n() << ",\n";
  out << "  \"m\": " << f.m() << ",\n";
  out << "  \"method\": " << ordered_json(std::string(to_string(f.method()))).dump() << ",\n";
  out << "  \"vertices\": [";
  const auto& labels = f.labels();
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const GridVertex v = g.vertex_at(k);
    out << (k == 0 ? "\n" : ",\n") << "    {\"i\": " << v.i << ", \"j\": " << v.j
        << ", \"label\": " << labels[k] << "}";
  }
  out << "\n  ]";
  if (include_edges) {
    const EdgeLabeling induced = induce_edge_labels(g, f);
    out << ",\n  \"edges\": [";
    for (std::size_t k = 0; k < induced.edges.size(); ++k) {
      const Edge& e = induced.edges[k];
      out << (k == 0 ? "\n" : ",\n") << "    {\"from\": " << vertex_json(e.from)
          << ", \"to\": " << vertex_json(e.to) << ", \"label\": " << induced.labels[k] << "}";
    }
    out << "\n  ]";
  }
  out << "\n}\n";
  return out.str();
}

namespace {

std::int64_t line_of_byte(std::string_view text, std::size_t byte) {
  const std::size_t end = std::min(byte, text.size());
  return 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(end), '\n');
}

std::int64_t integer_field(const ordered_json& obj, const std::string& key, const std::string& where,
                           std::int64_t min_value) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing field \"" + key + "\"");
  if (!it->is_number_integer()) throw ParseError(where + "." + key + ": expected an integer");
  if (it->is_number_unsigned() &&
      it->get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw ParseError(where + "." + key + ": value exceeds the 64-bit range");
  }
  const auto value = it->get<std::int64_t>();
  if (value < min_value) {
    throw ParseError(where + "." + key + ": expected an integer >= " + std::to_string(min_value));
  }
  return value;
}

void only_fields(const ordered_json& obj, std::initializer_list<std::string_view> allowed,
                 const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ParseError(where + ": unknown field \"" + key + "\"");
    }
  }
}

GridVertex pair_field(const ordered_json& obj, const std::string& key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing field \"" + key + "\"");
  if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number_integer() ||
      !(*it)[1].is_number_integer()) {
    throw ParseError(where + "." + key + ": expected [i, j]");
  }
  return {(*it)[0].get<std::int64_t>(), (*it)[1].get<std::int64_t>()};
}

}  // namespace

Labeling parse_labeling(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("line " + std::to_string(line_of_byte(text, e.byte)) + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError("document: expected a JSON object");
  only_fields(doc, {"n", "m", "method", "vertices", "edges"}, "document");

  const std::int64_t n = integer_field(doc, "n", "document", 0);
  const std::int64_t m = integer_field(doc, "m", "document", 0);
  if (n < 2 || m < 2) {
    throw DocumentError("document: grid " + std::to_string(n) + " x " + std::to_string(m) +
                        " is smaller than 2 x 2");
  }
  const auto method_it = doc.find("method");
  if (method_it == doc.end()) throw ParseError("document: missing field \"method\"");
  if (!method_it->is_string()) throw ParseError("document.method: expected a string");
  const auto method = parse_method(method_it->get<std::string>());
  if (!method) throw ParseError("document.method: unknown method \"" + method_it->get<std::string>() + "\"");

  const auto vertices_it = doc.find("vertices");
  if (vertices_it == doc.end()) throw ParseError("document: missing field \"vertices\"");
  if (!vertices_it->is_array()) throw ParseError("document.vertices: expected an array");

  const TensorGraph g(n, m);
  const auto count = static_cast<std::size_t>(g.vertex_count());
  std::vector<Label> labels(count, 0);
  std::vector<bool> seen(count, false);
  std::size_t k = 0;
  for (const auto& entry : *vertices_it) {
    const std::string where = "vertices[" + std::to_string(k++) + "]";
    if (!entry.is_object()) throw ParseError(where + ": expected an object");
    only_fields(entry, {"i", "j", "label"}, where);
    const GridVertex v{integer_field(entry, "i", where, std::numeric_limits<std::int64_t>::min()),
                       integer_field(entry, "j", where, std::numeric_limits<std::int64_t>::min())};
    const Label label = integer_field(entry, "label", where, 0);
    if (!g.contains(v)) {
      throw DocumentError(where + ": vertex " + vertex_json(v) + " outside the " +
                          std::to_string(n) + " x " + std::to_string(m) + " grid");
    }
    const std::size_t idx = g.index_of(v);
    if (seen[idx]) throw DocumentError(where + ": vertex " + vertex_json(v) + " listed twice");
    seen[idx] = true;
    labels[idx] = label;
  }
  if (k != count) {
    throw DocumentError("document: " + std::to_string(k) + " vertices listed, grid " +
                        std::to_string(n) + " x " + std::to_string(m) + " has " +
                        std::to_string(count));
  }
  Labeling f(n, m, *method, std::move(labels));

  const auto edges_it = doc.find("edges");
  if (edges_it != doc.end()) {
    if (!edges_it->is_array()) throw ParseError("document.edges: expected an array");
    const EdgeLabeling induced = induce_edge_labels(g, f);
    if (edges_it->size() != induced.edges.size()) {
      throw DocumentError("document: " + std::to_string(edges_it->size()) + " edges listed, graph has " +
                          std::to_string(induced.edges.size()));
    }
    std::size_t e = 0;
    for (const auto& entry : *edges_it) {
      const std::string where = "edges[" + std::to_string(e) + "]";
      if (!entry.is_object()) throw ParseError(where + ": expected an object");
      only_fields(entry, {"from", "to", "label"}, where);
      const Edge listed{pair_field(entry, "from", where), pair_field(entry, "to", where)};
      const Label label = integer_field(entry, "label", where, 0);
      if (listed != induced.edges[e]) {
        throw DocumentError(where + ": expected edge " + vertex_json(induced.edges[e].from) + " -> " +
                            vertex_json(induced.edges[e].to) + " in canonical order");
      }
      if (label != induced.labels[e]) {
        throw DocumentError(where + ": label " + std::to_string(label) + " differs from |f(u) - f(v)| = " +
                            std::to_string(induced.labels[e]));
      }
      ++e;
    }
  }
  return f;
}

std::optional<ExportFormat> parse_export_format(std::string_view text) {
  if (text == "dot") return ExportFormat::dot;
  if (text == "csv") return ExportFormat::csv;
  return std::nullopt;
}

namespace {

std::string node_name(GridVertex v) {
  return "v_" + std::to_string(v.i) + "_" + std::to_string(v.j);
}

}  // namespace

std::string export_graph(const TensorGraph& g, const Labeling* f, ExportFormat format) {
  if (f != nullptr && !f->same_dimensions(g)) {
    throw DimensionError("labeling and graph dimensions differ");
  }
  std::ostringstream out;
  const auto& edges = g.edges();
  std::optional<EdgeLabeling> induced;
  if (f != nullptr) induced = induce_edge_labels(g, *f);

  if (format == ExportFormat::csv) {
    out << "i1,j1,i2,j2,fu,fv,edge_label\n";
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const Edge& e = edges[k];
      out << e.from.i << ',' << e.from.j << ',' << e.to.i << ',' << e.to.j << ',';
      if (f != nullptr) {
        out << f->at(e.from) << ',' << f->at(e.to) << ',' << induced->labels[k];
      } else {
        out << ",,";
      }
      out << '\n';
    }
    return out.str();
  }

  // Lines run left to right, rows bottom to top; "pos" is honoured by neato -n.
  out << "graph P" << g.n() << "_x_P" << g.m() << " {\n";
  out << "  node [shape=circle];\n";
  for (std::int64_t j = 1; j <= g.m(); ++j) {
    for (std::int64_t i = 1; i <= g.n(); ++i) {
      const GridVertex v{i, j};
      out << "  " << node_name(v) << " [pos=\"" << j << "," << i << "!\"";
      if (f != nullptr) out << ", label=\"" << f->at(v) << "\"";
      out << "];\n";
    }
  }
  for (std::size_t k = 0; k < edges.size(); ++k) {
    out << "  " << node_name(edges[k].from) << " -- " << node_name(edges[k].to);
    if (f != nullptr) out << " [label=\"" << induced->labels[k] << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

IntRange parse_range(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw ParseError("bad range \"" + std::string(text) + "\": expected A..B");
    }
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const auto v = parse_int(text);
    return {v, v};
  }
  return {parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
}

SweepReport run_sweep(IntRange n_range, IntRange m_range, Method method, unsigned threads) {
  if (method != Method::general && method != Method::closed_form) {
    throw UnsupportedCase("sweep supports the general and closed_form methods only");
  }
  SweepReport report;
  report.method = std::string(to_string(method));
  const auto start = std::chrono::steady_clock::now();
  if (n_range.empty() || m_range.empty()) return report;
  if (n_range.first < 2 || m_range.first < 2) {
    throw DimensionError("sweep ranges must start at 2 or above");
  }
  if (method == Method::closed_form && (!has_closed_form(m_range.first) || !has_closed_form(m_range.last))) {
    throw UnsupportedCase("closed_form sweeps need m within 2..6");
  }

  for (std::int64_t n = n_range.first; n <= n_range.last; ++n) {
    for (std::int64_t m = m_range.first; m <= m_range.last; ++m) {
      SweepEntry entry;
      entry.n = n;
      entry.m = m;
      report.entries.push_back(std::move(entry));
    }
  }

  auto run_one = [method](SweepEntry& entry) {
    const TensorGraph g(entry.n, entry.m);
    entry.q = g.q();
    const Labeling f = full_labeling(g, method);
    const VerificationReport vr = verify_odd_graceful(g, f);
    entry.passed = vr.passed;
    for (const auto& c : vr.checks) {
      if (!c.advisory && !c.passed) entry.failed_checks.push_back(c.name);
    }
    if (method == Method::closed_form) {
      entry.matches_general = full_labeling(g, Method::general).labels() == f.labels();
      if (!*entry.matches_general) {
        entry.passed = false;
        entry.failed_checks.push_back("matches-general");
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, report.entries.size()));
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < report.entries.size(); k = next++) run_one(report.entries[k]);
      });
    }
  }
  report.failures = static_cast<std::size_t>(
      std::count_if(report.entries.begin(), report.entries.end(), [](const SweepEntry& e) { return !e.passed; }));
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

ordered_json vertex_value(GridVertex v) { return ordered_json::array({v.i, v.j}); }

ordered_json edge_value(const Edge& e) {
  return {{"from", vertex_value(e.from)}, {"to", vertex_value(e.to)}};
}

ordered_json report_value(const VerificationReport& report) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"advisory", c.advisory}, {"detail", c.detail}});
  }
  ordered_json witnesses = ordered_json::array();
  for (const auto& w : report.witnesses) {
    ordered_json item{{"check", w.check}};
    if (!w.vertices.empty()) {
      ordered_json vs = ordered_json::array();
      for (const auto& v : w.vertices) vs.push_back(vertex_value(v));
      item["vertices"] = std::move(vs);
    }
    if (w.edge) item["edge"] = edge_value(*w.edge);
    if (w.value) item["value"] = *w.value;
    item["note"] = w.note;
    witnesses.push_back(std::move(item));
  }
  return {{"passed", report.passed}, {"q", report.q}, {"checks", std::move(checks)},
          {"witnesses", std::move(witnesses)}};
}

std::string dump(const ordered_json& value) { return value.dump(2) + "\n"; }

}  // namespace

std::string serialize_report(const VerificationReport& report) { return dump(report_value(report)); }

std::string serialize_search(const TensorGraph& g, const SearchOutcome& outcome) {
  ordered_json labelings = ordered_json::array();
  for (const auto& f : outcome.labelings) labelings.push_back(f.labels());
  return dump({{"n", g.n()},
               {"m", g.m()},
               {"q", g.q()},
               {"status", to_string(outcome.status)},
               {"nodes_expanded", outcome.nodes_expanded},
               {"labelings_found", outcome.labelings.size()},
               {"labelings", std::move(labelings)},
               {"warnings", outcome.warnings}});
}

std::string serialize_cross_validation(const CrossValidation& cv) {
  ordered_json out{{"n", cv.n},
                   {"m", cv.m},
                   {"constructive_valid", cv.constructive_valid},
                   {"oracle_status", to_string(cv.oracle_status)},
                   {"oracle_nodes", cv.oracle_nodes},
                   {"oracle_labelings", cv.oracle_labelings}};
  out["constructive_reproduced"] =
      cv.constructive_reproduced ? ordered_json(*cv.constructive_reproduced) : ordered_json(nullptr);
  out["notes"] = cv.notes;
  out["constructive_report"] = report_value(cv.constructive_report);
  return dump(out);
}

std::string serialize_prediction_check(const PredictionCrossCheck& check) {
  ordered_json mismatches = ordered_json::array();
  for (const auto& mm : check.mismatches) {
    ordered_json item = edge_value(mm.edge);
    item["predicted"] = mm.predicted;
    item["induced"] = mm.induced;
    item["rule"] = to_string(mm.rule);
    mismatches.push_back(std::move(item));
  }
  return dump({{"n", check.n},
               {"m", check.m},
               {"covered", check.covered},
               {"not_covered", check.not_covered},
               {"final_gap_even_n", check.final_gap_even_n},
               {"agrees", check.agrees()},
               {"mismatches", std::move(mismatches)}});
}

std::string serialize_sweep(const SweepReport& report, bool include_time) {
  ordered_json entries = ordered_json::array();
  for (const auto& e : report.entries) {
    ordered_json item{{"n", e.n}, {"m", e.m}, {"q", e.q}, {"passed", e.passed}};
    if (e.matches_general) item["matches_general"] = *e.matches_general;
    if (!e.failed_checks.empty()) item["failed_checks"] = e.failed_checks;
    entries.push_back(std::move(item));
  }
  ordered_json out{{"method", report.method},
                   {"instances", report.entries.size()},
                   {"failures", report.failures},
                   {"passed", report.passed()}};
  if (include_time) out["wall_seconds"] = report.wall_seconds;
  out["entries"] = std::move(entries);
  return dump(out);
}

}  // namespace oddgrace
