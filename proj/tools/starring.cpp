// Command-line front end: analyze, graph, verify, corpus.

#include <starring/corpus.hpp>
#include <starring/report.hpp>
#include <starring/ring_spec.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace starring;

int cmd_analyze(const std::string& spec, bool as_json) {
  RingAnalysis A(build_ring(spec));
  if (as_json)
    std::cout << report_json(spec, A, run_all(A)).dump(2) << "\n";
  else
    std::cout << report_text(spec, A);
  return 0;
}

int cmd_graph(const std::string& spec, const std::string& kind, bool complemented, const std::string& format,
              const std::string& output) {
  const FiniteStarRing R = build_ring(spec);
  GraphKind k = GraphKind::strong;
  if (kind == "star") k = GraphKind::star_zdg;
  if (kind == "undirected") k = GraphKind::undirected_zdg;
  Graph g = build_graph(R, k);
  if (complemented) g = complement(g);

  std::string text;
  if (format == "dot")
    text = to_dot(R, g);
  else if (format == "json")
    text = graph_json(R, g).dump(2) + "\n";
  else
    text = to_edgelist(R, g);

  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) throw InvalidArgument("cannot write " + output);
    out << text;
  }
  return 0;
}

int cmd_verify(const std::string& spec, const std::vector<std::string>& ids, bool as_json) {
  std::vector<TheoremId> selected;
  for (const auto& s : ids) {
    auto id = theorem_from_code(s);
    if (!id) throw InvalidArgument("unknown theorem id '" + s + "'");
    selected.push_back(*id);
  }
  if (selected.empty())
    for (const auto& t : kTheorems) selected.push_back(t.id);

  RingAnalysis A(build_ring(spec));
  std::vector<CheckResult> results;
  for (TheoremId id : selected) results.push_back(check(id, A));

  bool violated = false;
  for (const auto& r : results) violated = violated || r.status == CheckStatus::violated;

  if (as_json) {
    std::cout << report_json(spec, A, results).dump(2) << "\n";
  } else {
    const FiniteStarRing& R = A.ring();
    for (const auto& r : results) {
      std::cout << code(r.id) << ": " << to_string(r.status);
      if (r.status == CheckStatus::holds && r.vacuous) std::cout << " (vacuous)";
      if (r.status == CheckStatus::hypothesis_not_met) std::cout << " (" << r.hypothesis() << ")";
      if (r.witness && (r.status == CheckStatus::violated || !r.witness->elements.empty())) {
        std::cout << " [" << r.witness->note << ":";
        for (ElementId x : r.witness->elements) std::cout << " " << R.label(x);
        std::cout << "]";
      }
      std::cout << "\n";
    }
  }
  return violated ? 1 : 0;
}

int cmd_corpus(CorpusSpec c, unsigned jobs, bool as_json, bool converses) {
  const CorpusSummary s = run_corpus(c, jobs);
  if (as_json) {
    json out = corpus_json(s);
    if (converses) {
      json cv = json::object();
      for (const auto& t : kTheorems) {
        if (!has_converse(t.id)) continue;
        auto w = find_converse_counterexample(t.id, c);
        if (!w) {
          cv[std::string(t.code)] = nullptr;
          continue;
        }
        const FiniteStarRing R = build_ring(w->spec);
        cv[std::string(t.code)] = {{"ring", w->spec}, {"note", w->witness.note}, {"elements", json::array()}};
        for (ElementId x : w->witness.elements) cv[std::string(t.code)]["elements"].push_back(R.label(x));
      }
      out["converses"] = cv;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << s.table();
    if (converses)
      for (const auto& t : kTheorems) {
        if (!has_converse(t.id)) continue;
        std::cout << "converse " << t.code << ": ";
        auto w = find_converse_counterexample(t.id, c);
        if (!w) {
          std::cout << "none\n";
          continue;
        }
        const FiniteStarRing R = build_ring(w->spec);
        std::cout << w->spec << " [" << w->witness.note << ":";
        for (ElementId x : w->witness.elements) std::cout << " " << R.label(x);
        std::cout << "]\n";
      }
  }
  return s.ok() ? 0 : 1;
}

std::vector<unsigned> parse_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    // Accept "Z4" as well as "4".
    std::size_t p = 0;
    while (p < item.size() && (std::isspace(static_cast<unsigned char>(item[p])) || item[p] == 'Z' || item[p] == 'z')) ++p;
    if (p == item.size()) continue;
    out.push_back(static_cast<unsigned>(std::stoul(item.substr(p))));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong zero-divisor graphs of finite rings with involution"};
  app.require_subcommand(1);

  std::string spec;
  bool as_json = false;

  auto* analyze = app.add_subcommand("analyze", "classify a ring and summarize its strong graph");
  analyze->add_option("spec", spec, "ring specification, e.g. 'Z2 x Z4' or 'M2(Z6)@id'")->required();
  analyze->add_flag("--json", as_json, "print the full JSON report");

  std::string kind = "strong", format = "edgelist", output;
  bool complemented = false;
  auto* graph = app.add_subcommand("graph", "export a graph of the ring");
  graph->add_option("spec", spec, "ring specification")->required();
  graph->add_option("--kind", kind, "strong | star | undirected")
      ->check(CLI::IsMember({"strong", "star", "undirected"}));
  graph->add_flag("--complement", complemented, "export the complement graph");
  graph->add_option("--format", format, "dot | json | edgelist")->check(CLI::IsMember({"dot", "json", "edgelist"}));
  graph->add_option("-o,--output", output, "output file (default stdout)");

  std::vector<std::string> theorems;
  auto* verify = app.add_subcommand("verify", "check theorems on one ring; exit 1 iff any is violated");
  verify->add_option("spec", spec, "ring specification")->required();
  verify->add_option("--theorem", theorems, "theorem id, repeatable (default: all)");
  verify->add_flag("--json", as_json, "print the JSON report");

  CorpusSpec corpus;
  std::string factors, matrix;
  unsigned jobs = 1;
  bool converses = false;
  auto* run = app.add_subcommand("corpus", "verify every theorem over an enumerated corpus");
  run->add_option("--zmod-max", corpus.zmod_max, "largest n for Z_n")->capture_default_str();
  run->add_option("--product-order-max", corpus.product_order_max, "largest product order")->capture_default_str();
  run->add_option("--factors", factors, "comma-separated factor moduli (default 2,3,4,5,6,8,9)");
  run->add_option("--matrix", matrix, "comma-separated moduli for M2(Z_n) (default 2,3,4,6)");
  run->add_option("--jobs", jobs, "worker threads")->capture_default_str();
  run->add_flag("--json", as_json, "print the summary as JSON");
  run->add_flag("--converses", converses, "also locate the first converse counterexamples");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return cmd_analyze(spec, as_json);
    if (*graph) return cmd_graph(spec, kind, complemented, format, output);
    if (*verify) return cmd_verify(spec, theorems, as_json);
    if (*run) {
      if (run->count("--factors")) corpus.factors = parse_list(factors);
      if (run->count("--matrix")) corpus.matrix_moduli = parse_list(matrix);
      return cmd_corpus(corpus, jobs, as_json, converses);
    }
  } catch (const starring::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
