#pragma once

#include <starring/corpus.hpp>
#include <starring/theorems.hpp>

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace starring {

using nlohmann::json;

namespace detail {

inline json length_json(const Length& l) {
  if (l.is_finite()) return l.value();
  return l.to_string();
}

inline json labels(const FiniteStarRing& R, const std::vector<ElementId>& xs) {
  json out = json::array();
  for (ElementId x : xs) out.push_back(R.label(x));
  return out;
}

inline std::string quoted_if_spaced(const std::string& s) {
  return s.find(' ') == std::string::npos ? s : "\"" + s + "\"";
}

inline json graph_summary(const FiniteStarRing& R, const Graph& g, const GraphMetrics& m) {
  json out;
  out["vertices"] = m.vertex_count;
  out["edges"] = m.edge_count;
  out["diameter"] = length_json(m.diameter);
  out["girth"] = length_json(m.girth);
  out["connected"] = m.connected;
  out["component_count"] = m.component_count;
  out["cut_vertices"] = labels(R, cut_vertices(g).to_vector());
  out["pendants"] = labels(R, pendant_vertices(g).to_vector());
  if (auto parts = is_complete_bipartite(g))
    out["complete_bipartite"] = {parts->larger, parts->smaller};
  else
    out["complete_bipartite"] = nullptr;
  return out;
}

}  // namespace detail

inline json to_json(const FiniteStarRing& R, const CheckResult& r) {
  json out;
  out["id"] = std::string(code(r.id));
  out["status"] = to_string(r.status);
  if (r.status == CheckStatus::holds) out["vacuous"] = r.vacuous;
  if (r.status == CheckStatus::hypothesis_not_met) out["hypothesis"] = r.hypothesis();
  out["instances"] = r.instances;
  if (r.witness && (r.status != CheckStatus::hypothesis_not_met || !r.witness->elements.empty() || !r.witness->note.empty()))
    out["witness"] = {{"note", r.witness->note}, {"elements", detail::labels(R, r.witness->elements)}};
  return out;
}

inline json classification_json(const FiniteStarRing& R, const ClassificationReport& c) {
  json out = {{"rickart", c.is_rickart},       {"baer", c.is_baer},
              {"quasi_baer", c.is_quasi_baer}, {"pq_baer", c.is_pq_baer},
              {"semiproper", c.is_semiproper}};
  json w = json::object();
  if (c.rickart_witness) w["rickart"] = R.label(*c.rickart_witness);
  if (!c.is_baer) w["baer"] = detail::labels(R, c.baer_witness);
  if (!c.is_quasi_baer) w["quasi_baer"] = detail::labels(R, c.quasi_baer_witness);
  if (c.pq_baer_witness) w["pq_baer"] = R.label(*c.pq_baer_witness);
  if (c.semiproper_witness) w["semiproper"] = R.label(*c.semiproper_witness);
  out["witnesses"] = w;
  return out;
}

/// Full machine-readable report. `spec` is echoed exactly as given.
inline json report_json(const std::string& spec, const RingAnalysis& A, const std::vector<CheckResult>& checks) {
  const FiniteStarRing& R = A.ring();
  json out;
  out["spec"] = spec;
  out["descriptor"] = R.descriptor();
  out["order"] = R.order();
  out["involution_proper"] = R.involution_proper();
  out["classification"] = classification_json(R, A.classification());
  out["cp"] = {{"count", A.lattice().size()}, {"atoms", detail::labels(R, A.lattice().atoms())}};
  out["graphs"] = {{"strong", detail::graph_summary(R, A.strong(), A.strong_metrics())},
                   {"complement", detail::graph_summary(R, A.complement(), A.complement_metrics())}};
  json cs = json::array();
  for (const auto& c : checks) cs.push_back(to_json(R, c));
  out["checks"] = cs;
  return out;
}

/// Human-readable summary printed by `analyze`.
inline std::string report_text(const std::string& spec, const RingAnalysis& A) {
  const FiniteStarRing& R = A.ring();
  const auto& c = A.classification();
  auto join = [&](const std::vector<ElementId>& xs) {
    std::string s;
    for (ElementId x : xs) s += (s.empty() ? "" : " ") + R.label(x);
    return s.empty() ? std::string("-") : s;
  };
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream os;
  os << "spec: " << spec << "\n"
     << "descriptor: " << R.descriptor() << "\n"
     << "order: " << R.order() << "\n"
     << "involution proper: " << yes(R.involution_proper()) << "\n"
     << "rickart: " << yes(c.is_rickart) << "  baer: " << yes(c.is_baer) << "  quasi-baer: " << yes(c.is_quasi_baer)
     << "  pq-baer: " << yes(c.is_pq_baer) << "  semiproper: " << yes(c.is_semiproper) << "\n";
  if (c.pq_baer_witness) os << "pq-baer witness: " << R.label(*c.pq_baer_witness) << "\n";
  if (c.semiproper_witness) os << "semiproper witness: " << R.label(*c.semiproper_witness) << "\n";
  os << "|CP(R)|: " << A.lattice().size() << "\n"
     << "CP atoms: " << join(A.lattice().atoms()) << "\n";
  for (const auto* name : {"strong", "complement"}) {
    const bool strong = std::string(name) == "strong";
    const Graph& g = strong ? A.strong() : A.complement();
    const auto& m = strong ? A.strong_metrics() : A.complement_metrics();
    os << name << ": vertices " << m.vertex_count << ", edges " << m.edge_count << ", connected "
       << yes(m.connected) << ", components " << m.component_count << ", diameter " << m.diameter.to_string()
       << ", girth " << m.girth.to_string() << "\n";
    if (auto parts = is_complete_bipartite(g))
      os << name << " complete bipartite: (" << parts->larger << "," << parts->smaller << ")\n";
    if (strong) {
      os << "cut vertices: " << join(A.cut_vertices().to_vector()) << "\n"
         << "pendants: " << join(A.pendants().to_vector()) << "\n";
    }
  }
  return os.str();
}

inline std::string to_edgelist(const FiniteStarRing& R, const Graph& g) {
  std::string out;
  for (const auto& [u, v] : g.edges())
    out += detail::quoted_if_spaced(R.label(u)) + " " + detail::quoted_if_spaced(R.label(v)) + "\n";
  return out;
}

inline std::string to_dot(const FiniteStarRing& R, const Graph& g) {
  auto q = [&](ElementId x) {
    std::string s = "\"";
    for (char ch : R.label(x)) {
      if (ch == '"' || ch == '\\') s += '\\';
      s += ch;
    }
    return s + "\"";
  };
  std::ostringstream os;
  os << "graph " << (g.is_complement() ? "complement_" : "") << to_string(g.kind()) << " {\n";
  for (ElementId v : g.vertices()) os << "  " << q(v) << ";\n";
  for (const auto& [u, v] : g.edges()) os << "  " << q(u) << " -- " << q(v) << ";\n";
  os << "}\n";
  return os.str();
}

inline json graph_json(const FiniteStarRing& R, const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({R.label(u), R.label(v)});
  return {{"kind", to_string(g.kind())},
          {"complement", g.is_complement()},
          {"vertices", detail::labels(R, g.vertices())},
          {"edges", edges}};
}

inline json corpus_json(const CorpusSummary& s) {
  json rows = json::array();
  for (const auto& t : kTheorems) {
    const auto& c = s.tallies[static_cast<std::size_t>(t.id)];
    rows.push_back({{"id", std::string(t.code)},
                    {"holds", c.holds},
                    {"vacuous", c.vacuous},
                    {"gated", c.gated},
                    {"violated", c.violated}});
  }
  json violations = json::array();
  for (const auto& r : s.rings)
    for (const auto& c : r.results)
      if (c.status == CheckStatus::violated)
        violations.push_back({{"ring", r.spec}, {"id", std::string(code(c.id))}, {"note", c.witness ? c.witness->note : ""}});
  return {{"rings", s.rings.size()}, {"theorems", rows}, {"violations", violations}};
}

}  // namespace starring
