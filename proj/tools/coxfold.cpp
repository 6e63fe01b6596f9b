// coxfold: root systems, foldings and basis verdicts for Coxeter graphs with symmetry.
//
//   coxfold roots D4 --depth 99
//   coxfold check tD4:rot4 --format text
//   coxfold selftest --only affine

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coxfold/acceptance.hpp"
#include "coxfold/classify.hpp"
#include "coxfold/errors.hpp"
#include "coxfold/folding.hpp"
#include "coxfold/parse.hpp"
#include "coxfold/report.hpp"
#include "coxfold/verify.hpp"

namespace {

using namespace coxfold;

enum ExitCode { kOk = 0, kUsage = 1, kUndecided = 2 };

struct Options {
  std::string input;
  std::string format = "json";
  std::string out;
  std::vector<std::string> only;
  bool timing = false;
  Budget budget;
};

struct Outcome {
  Json result;
  int code = kOk;
};

SearchLimits limits(const Budget& b) { return {b.root_depth, b.node_cap}; }

Outcome cmd_roots(const Options& o) {
  const SymmetricGraph pair = load_input(o.input, o.budget.closure_cap);
  const CanonicalRepresentation rep(pair.graph);
  const RootSet roots = enumerate_positive_roots(rep, o.budget.root_depth, o.budget.node_cap);
  return {roots_json(pair.graph, roots)};
}

Outcome cmd_fold(const Options& o) {
  const SymmetricGraph pair = load_input(o.input, o.budget.closure_cap);
  const CanonicalRepresentation rep(pair.graph);
  const FoldedSystem folded = fold(rep, pair.group, o.budget.order_cap);
  const RootSet folded_roots = enumerate_folded_roots(folded, limits(o.budget));
  return {fold_json(pair.graph, folded, folded_roots)};
}

Outcome cmd_orbits(const Options& o) {
  const SymmetricGraph pair = load_input(o.input, o.budget.closure_cap);
  const CanonicalRepresentation rep(pair.graph);
  const RootSet roots = enumerate_positive_roots(rep, o.budget.root_depth, o.budget.node_cap);
  const OrbitDecomposition orbits = root_orbits(roots, pair.group);
  std::optional<FMap> f;
  if (roots.complete()) {
    const FoldedSystem folded = fold(rep, pair.group, o.budget.order_cap);
    const RootSet folded_roots = enumerate_folded_roots(folded, limits(o.budget));
    f = compute_F(folded, folded_roots, roots, orbits);
  }
  return {orbits_json(pair.graph, roots, orbits, f)};
}

Outcome cmd_check(const Options& o) {
  const SymmetricGraph pair = load_input(o.input, o.budget.closure_cap);
  const Verdict v = decide(pair.graph, pair.group, o.budget);
  return {verdict_json(pair.graph, pair.group, v), v.budget_exhausted ? kUndecided : kOk};
}

Outcome cmd_classify(const Options& o) {
  const SymmetricGraph pair = load_input(o.input, o.budget.closure_cap);
  Json result = classification_json(classify_reduced(pair.graph, pair.group));
  result["graph"] = pair.graph.name();
  result["vertices"] = pair.graph.vertices();
  result["group_order"] = pair.group.order();
  return {std::move(result)};
}

Outcome cmd_witness(const Options& o) {
  const SymmetricGraph pair = load_input(o.input, o.budget.closure_cap);
  const Verdict v = decide(pair.graph, pair.group, o.budget);
  Json result;
  result["graph"] = pair.graph.name();
  result["status"] = status_name(v.status);
  Json list = Json::array();
  for (const auto& c : v.components) {
    if (!c.witness) continue;
    const CoxeterGraph local(c.vertices, {});
    Json j = witness_json(local, *c.witness);
    j["component"] = c.vertices;
    list.push_back(std::move(j));
  }
  result["witnesses"] = std::move(list);
  const bool undecided = v.status != Status::fails && v.budget_exhausted;
  return {std::move(result), undecided ? kUndecided : kOk};
}

Outcome cmd_selftest(const Options& o) {
  AcceptanceOptions options;
  options.only = o.only;
  Json list = Json::array();
  bool all = true;
  for (const CriterionResult& r : run_acceptance(options)) {
    Json j;
    j["number"] = r.number;
    j["tag"] = r.tag;
    j["title"] = r.title;
    j["passed"] = r.passed;
    j["detail"] = r.detail;
    all = all && r.passed;
    list.push_back(std::move(j));
  }
  Json result;
  result["criteria"] = std::move(list);
  result["all_passed"] = all;
  return {std::move(result)};
}

std::string selftest_lines(const Json& report) {
  std::string out;
  for (const auto& c : report["result"]["criteria"]) {
    out += c["passed"].get<bool>() ? "PASS " : "FAIL ";
    out += std::to_string(c["number"].get<int>()) + " " + c["tag"].get<std::string>() + ": " +
           c["title"].get<std::string>() + "\n";
    if (!c["passed"].get<bool>())
      for (const auto& d : c["detail"]) out += "    " + d.get<std::string>() + "\n";
  }
  return out;
}

int emit(const Options& o, const std::string& command, const Outcome& outcome, double seconds) {
  RunInfo info{command, o.input, o.format, o.budget};
  Json report = envelope(info, outcome.result);
  if (o.timing) report["timing_seconds"] = seconds;
  std::string text;
  if (o.format == "json") {
    text = report.dump(2) + "\n";
  } else if (command == "selftest") {
    text = selftest_lines(report);
  } else {
    text = render_text(report);
  }
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      std::cerr << "coxfold: cannot write " << o.out << "\n";
      return kUsage;
    }
    file << text;
  }
  return outcome.code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Root systems, foldings and basis verdicts for Coxeter graphs with symmetry"};
  app.require_subcommand(1);
  Options o;

  using Handler = Outcome (*)(const Options&);
  const std::vector<std::pair<std::string, std::pair<std::string, Handler>>> commands = {
      {"roots", {"Enumerate positive roots", cmd_roots}},
      {"fold", {"Fold by the symmetry group", cmd_fold}},
      {"orbits", {"Group orbits of positive roots and the folding map", cmd_orbits}},
      {"check", {"Decide the basis property", cmd_check}},
      {"classify", {"Match against the list of admissible pairs", cmd_classify}},
      {"witness", {"Search for a failure witness", cmd_witness}},
      {"selftest", {"Run the acceptance matrix", cmd_selftest}},
  };

  std::string chosen;
  Handler handler = nullptr;
  for (const auto& [name, entry] : commands) {
    CLI::App* sub = app.add_subcommand(name, entry.first);
    if (name == "selftest") {
      sub->add_option("--only", o.only, "Criterion tags to run")->delimiter(',');
    } else {
      sub->add_option("input", o.input, "Catalog token (E6:g) or graph file")->required();
    }
    sub->add_option("--depth", o.budget.root_depth, "Root search depth")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--orbit-depth", o.budget.orbit_depth, "Orbit search depth")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--cap-closure", o.budget.closure_cap, "Largest symmetry group to close")
        ->check(CLI::PositiveNumber);
    sub->add_option("--cap-order", o.budget.order_cap, "Power iteration cap for folded orders")
        ->check(CLI::PositiveNumber);
    sub->add_option("--cap-nodes", o.budget.node_cap, "Node cap for searches")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", o.out, "Write the report to a file");
    sub->add_flag("--timing", o.timing, "Add wall-clock time to the report");
    sub->callback([&chosen, &handler, name = name, h = entry.second] {
      chosen = name;
      handler = h;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    const Outcome outcome = handler(o);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return emit(o, chosen, outcome, elapsed.count());
  } catch (const CapExceeded& e) {
    std::cerr << "coxfold: budget exhausted: " << e.what() << "\n";
    return kUndecided;
  } catch (const InvariantViolation& e) {
    std::cerr << "coxfold: internal invariant violated: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "coxfold: " << e.what() << "\n";
    return kUsage;
  }
}
