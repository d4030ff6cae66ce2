// stochstab: stochastically stable states of perturbed Markov chains.
//
//   stochstab analyze <file> [--trace] [--dot DIR] [--verify]
//                            [--epsilons 1e-1,1e-2,...] [--threshold 0.01]
//                            [--json] [--cap N]
//
// Exit codes: 0 success, 1 parse/validation error, 2 oracle disagreement,
// 3 brute-force size cap exceeded under --verify.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stochstab/hub.hpp"
#include "stochstab/io/document.hpp"
#include "stochstab/io/report.hpp"
#include "stochstab/oracle/brute_force.hpp"
#include "stochstab/oracle/numeric.hpp"

namespace {

using namespace stochstab;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kBadInput = 1;
constexpr int kDisagreement = 2;
constexpr int kTooLarge = 3;

struct AnalyzeArgs {
  std::string file;
  bool trace = false;
  std::string dot_dir;
  bool verify = false;
  std::vector<double> epsilons{1e-1, 1e-2, 1e-3, 1e-4, 1e-5};
  double threshold = 0.01;
  bool json = false;
  std::size_t cap = oracle::kDefaultCap;
};

struct Verification {
  bool young_agrees = true;
  std::vector<std::string> young_stable;
  bool numeric_ran = false;
  bool numeric_agrees = true;
  std::string numeric_skip_reason;
  oracle::EmpiricalResult empirical;
  std::vector<std::string> disagreements;
};

Verification verify(const io::InputDocument& doc, const PerturbationGraph<MonomialClass>& g,
                    const io::Report& report, const AnalyzeArgs& args) {
  Verification v;
  v.young_stable = oracle::decomposed_stable_names(g, args.cap);
  if (v.young_stable != report.stable) {
    v.young_agrees = false;
    v.disagreements.push_back("arborescence oracle stable set differs");
  }

  try {
    v.empirical = oracle::empirical_stability(doc.states, io::to_numeric_spec(doc), args.epsilons, args.threshold);
    v.numeric_ran = true;
  } catch (const oracle::RowNotStochastic& e) {
    v.numeric_skip_reason = e.what();
    return v;
  }
  for (std::size_t i = 0; i < doc.states.size(); ++i) {
    const auto& name = doc.states[i];
    const bool hub_stable = std::binary_search(report.stable.begin(), report.stable.end(), name);
    const auto verdict = v.empirical.verdict[i];
    if ((hub_stable && verdict == oracle::Empirical::vanishing) ||
        (!hub_stable && verdict == oracle::Empirical::stable)) {
      v.numeric_agrees = false;
      v.disagreements.push_back("state " + name + ": hub says " + (hub_stable ? "stable" : "vanishing") +
                                ", empirical says " + oracle::to_string(verdict));
    }
  }
  return v;
}

json verification_json(const Verification& v) {
  json j = {{"arborescence_stable", v.young_stable}, {"arborescence_agrees", v.young_agrees}};
  if (!v.numeric_ran) {
    j["empirical"] = {{"skipped", v.numeric_skip_reason}};
  } else {
    json verdicts = json::object();
    for (std::size_t i = 0; i < v.empirical.states.size(); ++i)
      verdicts[v.empirical.states[i]] = oracle::to_string(v.empirical.verdict[i]);
    json mu = json::array();
    for (std::size_t e = 0; e < v.empirical.epsilons.size(); ++e)
      mu.push_back({{"epsilon", v.empirical.epsilons[e]}, {"mu", v.empirical.mu[e]}});
    j["empirical"] = {{"verdicts", verdicts},
                      {"agrees", v.numeric_agrees},
                      {"max_residual", v.empirical.max_residual},
                      {"sweep", mu},
                      {"warnings", v.empirical.warnings}};
  }
  j["disagreements"] = v.disagreements;
  return j;
}

void print_verification_text(std::ostream& os, const Verification& v) {
  os << "verify: arborescence oracle " << (v.young_agrees ? "agrees" : "DISAGREES") << '\n';
  if (!v.numeric_ran) {
    os << "verify: empirical check skipped (" << v.numeric_skip_reason << ")\n";
  } else {
    os << "verify: empirical check " << (v.numeric_agrees ? "agrees" : "DISAGREES")
       << " (max residual " << v.empirical.max_residual << ")\n";
    for (std::size_t i = 0; i < v.empirical.states.size(); ++i)
      os << "  " << v.empirical.states[i] << ": empirically " << oracle::to_string(v.empirical.verdict[i]) << '\n';
    for (const auto& w : v.empirical.warnings) os << "  warning: " << w << '\n';
  }
  for (const auto& d : v.disagreements) os << "  disagreement: " << d << '\n';
}

int analyze(const AnalyzeArgs& args) {
  std::ifstream in(args.file);
  if (!in) {
    std::cerr << "error: cannot open " << args.file << '\n';
    return kBadInput;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  io::InputDocument doc;
  try {
    doc = io::parse_document(buffer.str());
  } catch (const io::ValidationError& e) {
    for (const auto& p : e.problems()) std::cerr << "error: " << p << '\n';
    return kBadInput;
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }

  const auto graph = io::to_graph(doc);
  const auto result = hub(graph, HubOptions{Execution::parallel, args.trace || !args.dot_dir.empty()});

  const bool has_coefficients =
      std::any_of(doc.arcs.begin(), doc.arcs.end(), [](const io::InputArc& a) { return a.coeff != Rational(1); });
  const char* note = "the stable set and time scales do not depend on the coefficients";

  std::optional<Verification> verification;
  int status = kOk;
  if (args.verify) {
    try {
      verification = verify(doc, graph, result.report, args);
      if (!verification->disagreements.empty()) status = kDisagreement;
    } catch (const oracle::TooLarge& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kTooLarge;
    }
  }

  if (!args.dot_dir.empty()) io::write_level_dots(result.trace, args.dot_dir);

  if (args.json) {
    json out = io::report_to_json(result.report);
    if (args.trace) out["trace"] = io::trace_to_json(result.trace);
    if (verification) out["verify"] = verification_json(*verification);
    if (has_coefficients) out["note"] = note;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << io::format_report_text(result.report);
    if (has_coefficients) std::cout << "note: " << note << '\n';
    if (args.trace) std::cout << io::format_trace_text(result.trace);
    if (verification) print_verification_text(std::cout, *verification);
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stochastically stable states of perturbed Markov chains"};
  app.require_subcommand(1);

  AnalyzeArgs args;
  auto* cmd = app.add_subcommand("analyze", "Run the Hub algorithm on a perturbation file");
  cmd->add_option("file", args.file, "JSON or line-format perturbation")->required();
  cmd->add_flag("--trace", args.trace, "Print one record per recursion level");
  cmd->add_option("--dot", args.dot_dir, "Write level_<d>.dot files into this directory");
  cmd->add_flag("--verify", args.verify, "Cross-check with the arborescence and numerical oracles");
  cmd->add_option("--epsilons", args.epsilons, "Decreasing eps sweep for --verify")->delimiter(',');
  cmd->add_option("--threshold", args.threshold, "Empirical stability threshold");
  cmd->add_flag("--json", args.json, "Machine-readable output");
  cmd->add_option("--cap", args.cap, "Largest component size for brute-force checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kBadInput;
  }
  try {
    return analyze(args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
}
