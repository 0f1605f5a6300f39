// Command-line front end: label, verify, predict, search, crossval, sweep.
//
// Exit codes: 0 success, 1 verification failed (or nothing found),
// 2 usage or input error, 3 internal error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "oddgrace/cli_io.hpp"
#include "oddgrace/errors.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw oddgrace::Error("cannot open " + path + " for writing");
  out << text;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw oddgrace::ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

oddgrace::Method method_or_throw(const std::string& text) {
  const auto method = oddgrace::parse_method(text);
  if (!method || (*method != oddgrace::Method::general && *method != oddgrace::Method::closed_form)) {
    throw CLI::ValidationError("--method", "expected general or closed-form, got " + text);
  }
  return *method;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace oddgrace;

  CLI::App app{"Odd graceful labelings of the tensor product of two paths"};
  app.require_subcommand(1);

  std::int64_t n = 0;
  std::int64_t m = 0;
  std::string method_text = "general";
  std::string out_path;

  auto* label = app.add_subcommand("label", "Label P_n ^ P_m and print the labeling");
  bool with_edges = false;
  std::string format = "doc";
  label->add_option("--n", n, "Rows (path P_n)")->required();
  label->add_option("--m", m, "Lines (path P_m)")->required();
  label->add_option("--method", method_text, "general | closed-form");
  label->add_flag("--edges", with_edges, "Include induced edge labels in the document");
  label->add_option("--format", format, "doc | dot | csv")->check(CLI::IsMember({"doc", "dot", "csv"}));
  label->add_option("--out", out_path, "Write to FILE instead of stdout");

  auto* verify = app.add_subcommand("verify", "Verify a labeling document");
  std::string in_path;
  verify->add_option("--in", in_path, "Labeling document")->required();
  verify->add_option("--out", out_path, "Write the report to FILE");

  auto* predict = app.add_subcommand("predict", "Compare closed-form edge labels with induced ones");
  predict->add_option("--n", n)->required();
  predict->add_option("--m", m)->required();

  auto* search = app.add_subcommand("search", "Exhaustive search for odd graceful labelings");
  SearchBudget budget;
  search->add_option("--n", n)->required();
  search->add_option("--m", m)->required();
  search->add_option("--max-nodes", budget.max_nodes, "Node budget")->check(CLI::PositiveNumber);
  search->add_flag("--all", budget.find_all, "Enumerate every labeling");
  search->add_flag("--fix-zero", budget.fix_zero, "Pin f(1,1) = 0");

  auto* crossval = app.add_subcommand("crossval", "Check the construction against the search oracle");
  crossval->add_option("--n", n)->required();
  crossval->add_option("--m", m)->required();
  crossval->add_option("--max-nodes", budget.max_nodes)->check(CLI::PositiveNumber);
  crossval->add_flag("--all", budget.find_all);
  crossval->add_flag("--fix-zero", budget.fix_zero);

  auto* sweep = app.add_subcommand("sweep", "Label and verify every (n, m) in a grid");
  std::string n_range_text;
  std::string m_range_text;
  unsigned threads = 0;
  sweep->add_option("--n", n_range_text, "Row range A..B")->required();
  sweep->add_option("--m", m_range_text, "Line range C..D")->required();
  sweep->add_option("--method", method_text, "general | closed-form");
  sweep->add_option("--report", out_path, "Write the sweep report to FILE");
  sweep->add_option("--threads", threads, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*label) {
      const TensorGraph g(n, m);
      const Labeling f = full_labeling(g, method_or_throw(method_text));
      if (format == "doc") {
        emit(serialize_labeling(f, with_edges), out_path);
      } else {
        emit(export_graph(g, &f, *parse_export_format(format)), out_path);
      }
      return kOk;
    }
    if (*verify) {
      const Labeling f = parse_labeling(slurp(in_path));
      const VerificationReport report = verify_odd_graceful(TensorGraph(f.n(), f.m()), f);
      emit(serialize_report(report), out_path);
      return report.passed ? kOk : kFailed;
    }
    if (*predict) {
      const TensorGraph g(n, m);
      const PredictionCrossCheck check = cross_check_predictions(g, full_labeling(g));
      std::cout << serialize_prediction_check(check);
      return check.agrees() ? kOk : kFailed;
    }
    if (*search) {
      const TensorGraph g(n, m);
      const SearchOutcome outcome = search_odd_graceful(g, budget);
      std::cout << serialize_search(g, outcome);
      return outcome.status == SearchStatus::found ? kOk : kFailed;
    }
    if (*crossval) {
      const CrossValidation cv = cross_validate(n, m, budget);
      std::cout << serialize_cross_validation(cv);
      const bool ok = cv.constructive_valid && cv.oracle_status == SearchStatus::found &&
                      cv.constructive_reproduced.value_or(true);
      return ok ? kOk : kFailed;
    }
    if (*sweep) {
      const SweepReport report =
          run_sweep(parse_range(n_range_text), parse_range(m_range_text), method_or_throw(method_text), threads);
      const std::string text = serialize_sweep(report);
      emit(text, out_path);
      if (!out_path.empty()) {
        std::cout << report.entries.size() << " instances, " << report.failures << " failures, "
                  << report.wall_seconds << " s\n";
      }
      return report.passed() ? kOk : kFailed;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IndexError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedCase& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DocumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
