#pragma once

#include <starring/analysis.hpp>

#include <array>
#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace starring {

enum class TheoremId {
  prod_conn,
  central_conn,
  split_ideal,
  side_ideal,
  nonzd_sum,
  cut_propmax,
  side_idempotent,
  cor_side,
  cut_atom,
  cut_iff_pendant,
  ann_size_2,
  cutset_clique,
  dist_cover,
  cp4_bipartite,
  dist3,
  comp_conn_cp6,
  universal_cp4,
  comp_girth,
  trianglefree,
  girth,
  comp_diam2_girth3,
  not_complemented,
  z3z3,
};

struct TheoremInfo {
  TheoremId id;
  std::string_view code;
  std::string_view statement;
};

inline constexpr std::array<TheoremInfo, 23> kTheorems = {{
    {TheoremId::prod_conn, "TH-PROD-CONN",
     "for a direct product of two rings with nonempty strong graphs, the strong graph is connected with diameter <= 4"},
    {TheoremId::central_conn, "COR-CENTRAL-CONN", "a nontrivial central projection makes the strong graph connected"},
    {TheoremId::split_ideal, "TH-SPLIT-IDEAL", "if the strong graph splits via a, then {0, a} is an ideal"},
    {TheoremId::side_ideal, "TH-SIDE-IDEAL",
     "if the graph splits via a with X - a complete and some b in X - a adjacent to a has bRb* = 0, then V(X) u {0} is an ideal"},
    {TheoremId::nonzd_sum, "PROP-NONZD-SUM",
     "with a cut vertex, x + y lies in V u {0} for all x, y outside V u {0}"},
    {TheoremId::cut_propmax, "PROP-CUT-PROPMAX", "r(aR) is properly maximal for every cut vertex a"},
    {TheoremId::side_idempotent, "TH-SIDE-IDEMPOTENT",
     "p.q.-Baer: if X is complete with |V(X)| > 2 in a split via a, then b^2 in {0, b} for b in V(X) - a"},
    {TheoremId::cor_side, "COR-SIDE",
     "p.q.-Baer, |V(X)| > 2: some b with b^2 not in {0, b} forces X incomplete; X complete forces V(X) u {0} to be an ideal"},
    {TheoremId::cut_atom, "TH-CUT-ATOM", "p.q.-Baer: every cut vertex is an atom of the central projection lattice"},
    {TheoremId::cut_iff_pendant, "TH-CUT-IFF-PENDANT", "p.q.-Baer: a cut vertex exists iff a pendant vertex exists"},
    {TheoremId::ann_size_2, "COR-ANN-SIZE-2", "p.q.-Baer: a cut vertex exists iff |r(a)| = 2 for some a"},
    {TheoremId::cutset_clique, "TH-CUTSET-CLIQUE", "p.q.-Baer: the cut vertices form a clique"},
    {TheoremId::dist_cover, "LEM-DIST-COVER", "p.q.-Baer: d(a, b) = d(C(a), C(b)) whenever C(a) != C(b)"},
    {TheoremId::cp4_bipartite, "PROP-CP4-BIPARTITE",
     "p.q.-Baer, |CP| = 4: the strong graph is complete bipartite on C_e, C_(1-e) and its complement is disconnected"},
    {TheoremId::dist3, "LEM-DIST3", "p.q.-Baer: nontrivial central e, f with ef = 0 and e + f != 1 give d(1-e, 1-f) = 3"},
    {TheoremId::comp_conn_cp6, "TH-COMP-CONN-CP6", "p.q.-Baer: the complement is connected iff |CP| >= 6"},
    {TheoremId::universal_cp4, "COR-UNIVERSAL-CP4", "p.q.-Baer: a vertex adjacent to all others forces |CP| = 4"},
    {TheoremId::comp_girth, "PROP-COMP-GIRTH", "p.q.-Baer: a disconnected complement has girth 3 or infinity"},
    {TheoremId::trianglefree, "LEM-TRIANGLEFREE", "p.q.-Baer, triangle-free: a ~ b iff C(a) = 1 - C(b)"},
    {TheoremId::girth, "TH-GIRTH",
     "p.q.-Baer: girth 3 iff orthogonal nontrivial central e, f with e + f != 1 iff a 3-chain without 0; girth 4 iff "
     "triangle-free with |C_e|, |C_(1-e)| >= 2 for some nontrivial e"},
    {TheoremId::comp_diam2_girth3, "TH-COMP-DIAM2-GIRTH3", "p.q.-Baer: a connected complement has diameter 2 and girth 3"},
    {TheoremId::not_complemented, "LEM-NOT-COMPLEMENTED", "p.q.-Baer: a connected complement is not complemented"},
    {TheoremId::z3z3, "TH-Z3Z3",
     "p.q.-Baer with a vertex a != C(a): the complement is complemented iff R has the Z3 x Z3 fingerprint"},
}};

inline const TheoremInfo& info(TheoremId id) { return kTheorems[static_cast<std::size_t>(id)]; }
inline std::string_view code(TheoremId id) { return info(id).code; }

inline std::optional<TheoremId> theorem_from_code(std::string_view text) {
  for (const auto& t : kTheorems)
    if (t.code == text) return t.id;
  return std::nullopt;
}

enum class CheckStatus { holds, violated, hypothesis_not_met };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::holds: return "holds";
    case CheckStatus::violated: return "violated";
    case CheckStatus::hypothesis_not_met: return "hypothesis_not_met";
  }
  return "?";
}

/// Hypotheses a check may find unmet. Each one is replayable with replay_gate().
enum class Gate {
  none,
  no_vertices,
  not_pq_baer,
  few_central_projections,
  not_a_product,
  factor_without_vertices,
  no_nontrivial_central_projection,
  no_cut_vertex,
  too_few_vertices,
  cp_not_four,
  complement_connected,
  complement_disconnected,
  strong_graph_has_triangle,
  every_vertex_is_its_cover,
};

inline const char* to_string(Gate g) {
  switch (g) {
    case Gate::none: return "";
    case Gate::no_vertices: return "empty strong vertex set";
    case Gate::not_pq_baer: return "not p.q.-Baer";
    case Gate::few_central_projections: return "|CP(R)| < 4";
    case Gate::not_a_product: return "not constructed as a direct product";
    case Gate::factor_without_vertices: return "a factor has an empty strong vertex set";
    case Gate::no_nontrivial_central_projection: return "no nontrivial central projection";
    case Gate::no_cut_vertex: return "no cut vertex";
    case Gate::too_few_vertices: return "fewer than 3 vertices";
    case Gate::cp_not_four: return "|CP(R)| != 4";
    case Gate::complement_connected: return "complement is connected";
    case Gate::complement_disconnected: return "complement is disconnected";
    case Gate::strong_graph_has_triangle: return "strong graph has a triangle";
    case Gate::every_vertex_is_its_cover: return "every vertex equals its central cover";
  }
  return "?";
}

struct Witness {
  std::string note;
  std::vector<ElementId> elements;
};

struct CheckResult {
  TheoremId id{};
  CheckStatus status = CheckStatus::holds;
  /// holds without any instance of the hypothesis being exercised
  bool vacuous = false;
  /// number of hypothesis instances the conclusion was checked on
  std::size_t instances = 0;
  Gate gate = Gate::none;
  std::optional<Witness> witness;
  std::chrono::microseconds elapsed{0};

  std::string hypothesis() const { return to_string(gate); }
};

namespace detail {

class Checker {
 public:
  Checker(const RingAnalysis& A, TheoremId id) : A_(A), R_(A.ring()), G_(A.strong()) { result_.id = id; }

  CheckResult run();

 private:
  // Gates. Each returns true when the hypothesis is NOT met and records it.
  bool gate(Gate g, Witness w = {}) {
    result_.status = CheckStatus::hypothesis_not_met;
    result_.gate = g;
    result_.witness = std::move(w);
    return true;
  }
  bool gate_vertices() { return G_.vertex_count() == 0 && gate(Gate::no_vertices); }
  bool gate_pq_baer() {
    if (gate_vertices()) return true;
    const auto& c = A_.classification();
    if (!c.is_pq_baer) return gate(Gate::not_pq_baer, {"r(aR) is not generated by a projection", {*c.pq_baer_witness}});
    return false;
  }
  bool gate_pq_baer_cp4() {
    if (gate_pq_baer()) return true;
    if (A_.lattice().size() < 4)
      return gate(Gate::few_central_projections, {"central projections", A_.lattice().elements()});
    return false;
  }

  void violate(std::string note, std::vector<ElementId> elements) {
    if (result_.status == CheckStatus::violated) return;
    result_.status = CheckStatus::violated;
    result_.witness = Witness{std::move(note), std::move(elements)};
  }
  void finish_counted(std::size_t instances) {
    result_.instances = instances;
    result_.vacuous = instances == 0 && result_.status == CheckStatus::holds;
  }

  ElementId one_minus(ElementId e) const { return R_.sub(R_.one(), e); }
  bool adj(ElementId a, ElementId b) const { return G_.adjacent(a, b); }
  std::vector<ElementId> cuts() const { return A_.cut_vertices().to_vector(); }
  std::vector<ElementId> nontrivial_cp() const {
    std::vector<ElementId> out;
    for (ElementId e : A_.lattice().elements())
      if (A_.lattice().is_nontrivial(e)) out.push_back(e);
    return out;
  }
  bool looped(ElementId b) const { return A_.annihilators().ann_principal(b).contains(R_.star(b)); }
  bool idempotent_or_nil(ElementId b) const {
    const ElementId sq = R_.mul(b, b);
    return sq == R_.zero() || sq == b;
  }
  ElementSet with_zero(std::vector<ElementId> xs) const {
    ElementSet s = ElementSet::from(R_.order(), xs);
    s.insert(R_.zero());
    return s;
  }
  std::vector<ElementId> pair_in_different_components() const {
    const auto comp = component_ids(G_);
    for (std::size_t i = 1; i < comp.size(); ++i)
      if (comp[i] != comp[0]) return {G_.vertex(0), G_.vertex(i)};
    return {};
  }

  void prod_conn();
  void central_conn();
  void split_ideal();
  void side_ideal();
  void nonzd_sum();
  void cut_propmax();
  void side_idempotent();
  void cor_side();
  void cut_atom();
  void cut_iff_pendant();
  void ann_size_2();
  void cutset_clique();
  void dist_cover();
  void cp4_bipartite();
  void dist3();
  void comp_conn_cp6();
  void universal_cp4();
  void comp_girth();
  void trianglefree();
  void girth_characterization();
  void comp_diam2_girth3();
  void not_complemented();
  void z3z3();

  const RingAnalysis& A_;
  const FiniteStarRing& R_;
  const Graph& G_;
  CheckResult result_;
};

inline void Checker::prod_conn() {
  if (gate_vertices()) return;
  if (R_.kind() != RingKind::product) {
    gate(Gate::not_a_product);
    return;
  }
  for (const auto& factor : {R_.left_factor(), R_.right_factor()}) {
    AnnihilatorTable t(factor);
    bool has_vertex = false;
    for (ElementId a = 1; a < factor.order() && !has_vertex; ++a) has_vertex = t.ann_principal(a).size() > 1;
    if (!has_vertex) {
      gate(Gate::factor_without_vertices, {factor.descriptor() + " has no strong vertices", {}});
      return;
    }
  }
  const auto& m = A_.strong_metrics();
  if (!m.connected) {
    violate("vertices in different components", pair_in_different_components());
  } else if (m.diameter.value() > 4) {
    const auto& t = A_.strong_distances();
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < t.size(); ++j)
        if (t.at(i, j) > 4) {
          violate("distance exceeds 4", {G_.vertex(i), G_.vertex(j)});
          return;
        }
  }
  finish_counted(1);
}

inline void Checker::central_conn() {
  if (gate_vertices()) return;
  const auto nt = nontrivial_cp();
  if (nt.empty()) {
    gate(Gate::no_nontrivial_central_projection, {"central projections", A_.lattice().elements()});
    return;
  }
  if (!A_.strong_metrics().connected) violate("vertices in different components", pair_in_different_components());
  finish_counted(1);
}

inline void Checker::split_ideal() {
  if (gate_vertices()) return;
  const auto cv = cuts();
  for (ElementId a : cv)
    if (!is_ideal(R_, ElementSet(R_.order(), {R_.zero(), a}))) violate("{0, a} is not an ideal", {a});
  finish_counted(cv.size());
}

inline void Checker::side_ideal() {
  if (gate_vertices()) return;
  std::size_t instances = 0;
  for (ElementId a : cuts())
    for (const auto& comp : components_without(G_, a)) {
      // X - a complete forces X - a to be a single component of G - a.
      if (!is_clique(G_, comp)) continue;
      bool anchored = false;
      for (ElementId b : comp) anchored = anchored || (adj(a, b) && looped(b));
      if (!anchored) continue;
      ++instances;
      std::vector<ElementId> x = comp;
      x.push_back(a);
      if (!is_ideal(R_, with_zero(x))) violate("V(X) u {0} is not an ideal; X listed with the cut vertex last", x);
    }
  finish_counted(instances);
}

inline void Checker::nonzd_sum() {
  if (gate_vertices()) return;
  if (A_.cut_vertices().empty()) {
    gate(Gate::no_cut_vertex);
    return;
  }
  ElementSet inside = with_zero(G_.vertices());
  std::vector<ElementId> outside;
  for (ElementId x = 0; x < R_.order(); ++x)
    if (!inside.contains(x)) outside.push_back(x);
  for (std::size_t i = 0; i < outside.size(); ++i)
    for (std::size_t j = i; j < outside.size(); ++j)
      if (!inside.contains(R_.add(outside[i], outside[j]))) violate("x + y escapes V u {0}", {outside[i], outside[j]});
  finish_counted(outside.size());
}

inline void Checker::cut_propmax() {
  if (gate_vertices()) return;
  const auto cv = cuts();
  for (ElementId a : cv)
    if (!is_properly_maximal(A_.annihilators(), a)) violate("r(aR) is not properly maximal", {a});
  finish_counted(cv.size());
}

inline void Checker::side_idempotent() {
  if (gate_pq_baer_cp4()) return;
  std::size_t instances = 0;
  for (ElementId a : cuts())
    for (const auto& comp : components_without(G_, a)) {
      if (comp.size() < 2) continue;
      std::vector<ElementId> x = comp;
      x.push_back(a);
      if (!is_clique(G_, x)) continue;
      ++instances;
      for (ElementId b : comp)
        if (!idempotent_or_nil(b)) violate("b^2 not in {0, b} on a complete side; cut vertex last", {b, a});
    }
  finish_counted(instances);
}

inline void Checker::cor_side() {
  if (gate_pq_baer_cp4()) return;
  std::size_t instances = 0;
  for (ElementId a : cuts()) {
    const auto comps = components_without(G_, a);
    for (const auto& comp : comps) {
      std::vector<ElementId> x = comp;
      x.push_back(a);
      const bool complete = comp.size() >= 2 && is_clique(G_, x);
      // (b): a complete side with at least three vertices spans an ideal with 0.
      if (complete) {
        ++instances;
        if (!is_ideal(R_, with_zero(x))) violate("complete side X does not give an ideal; cut vertex last", x);
      }
      // (a): a vertex with b^2 not in {0, b} on a side of size > 2 makes that side incomplete.
      // A side spanning several components is never complete, so only the single-component
      // side can fail.
      for (ElementId b : comp) {
        if (idempotent_or_nil(b)) continue;
        if (comp.size() < 2 && comps.size() < 3) continue;
        ++instances;
        if (complete) violate("side containing b with b^2 not in {0, b} is complete; b first, cut vertex last",
                               [&] {
                                 std::vector<ElementId> w{b};
                                 w.insert(w.end(), x.begin(), x.end());
                                 return w;
                               }());
      }
    }
  }
  finish_counted(instances);
}

inline void Checker::cut_atom() {
  if (gate_pq_baer_cp4()) return;
  const auto cv = cuts();
  const auto& atoms = A_.lattice().atoms();
  for (ElementId a : cv)
    if (std::find(atoms.begin(), atoms.end(), a) == atoms.end())
      violate("cut vertex is not an atom of L(CP(R))", {a});
  finish_counted(cv.size());
}

inline void Checker::cut_iff_pendant() {
  if (gate_pq_baer_cp4()) return;
  if (G_.vertex_count() < 3) {
    gate(Gate::too_few_vertices, {"vertices", G_.vertices()});
    return;
  }
  const bool has_cut = !A_.cut_vertices().empty();
  const bool has_pendant = !A_.pendants().empty();
  if (has_cut && !has_pendant) violate("cut vertex without any pendant vertex", {A_.cut_vertices().to_vector().front()});
  if (!has_cut && has_pendant) violate("pendant vertex without any cut vertex", {A_.pendants().to_vector().front()});
  finish_counted(1);
}

inline void Checker::ann_size_2() {
  if (gate_pq_baer_cp4()) return;
  if (G_.vertex_count() < 3) {
    gate(Gate::too_few_vertices, {"vertices", G_.vertices()});
    return;
  }
  std::optional<ElementId> small;
  for (ElementId a = 0; a < R_.order() && !small; ++a)
    if (A_.annihilators().ann_elem(a).size() == 2) small = a;
  const bool has_cut = !A_.cut_vertices().empty();
  if (has_cut && !small) violate("cut vertex but no element with |r(a)| = 2", {A_.cut_vertices().to_vector().front()});
  if (!has_cut && small) violate("|r(a)| = 2 but no cut vertex", {*small});
  finish_counted(1);
}

inline void Checker::cutset_clique() {
  if (gate_pq_baer_cp4()) return;
  const auto cv = cuts();
  for (std::size_t i = 0; i < cv.size(); ++i)
    for (std::size_t j = i + 1; j < cv.size(); ++j)
      if (!adj(cv[i], cv[j])) violate("non-adjacent cut vertices", {cv[i], cv[j]});
  finish_counted(cv.size() >= 2 ? cv.size() : 0);
}

inline void Checker::dist_cover() {
  if (gate_pq_baer()) return;
  std::size_t instances = 0;
  const auto& vs = G_.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const ElementId a = vs[i], b = vs[j];
      const ElementId ca = A_.cover(a), cb = A_.cover(b);
      if (ca == cb) continue;
      ++instances;
      if (!G_.has_vertex(ca) || !G_.has_vertex(cb)) {
        violate("central cover is not a vertex", {a, b});
        continue;
      }
      if (A_.distance(a, b) != A_.distance(ca, cb)) violate("d(a, b) != d(C(a), C(b))", {a, b});
    }
  finish_counted(instances);
}

inline void Checker::cp4_bipartite() {
  if (gate_pq_baer_cp4()) return;
  if (A_.lattice().size() != 4) {
    gate(Gate::cp_not_four, {"central projections", A_.lattice().elements()});
    return;
  }
  const ElementId e = nontrivial_cp().front();
  ElementSet ce(R_.order()), cf(R_.order());
  for (ElementId x = 0; x < R_.order(); ++x) {
    if (A_.cover(x) == e) ce.insert(x);
    if (A_.cover(x) == one_minus(e)) cf.insert(x);
  }
  const auto parts = is_complete_bipartite(G_);
  if (!parts) {
    violate("strong graph is not complete bipartite", {e});
  } else {
    const ElementSet p1 = ElementSet::from(R_.order(), parts->first);
    const ElementSet p2 = ElementSet::from(R_.order(), parts->second);
    if (!((p1 == ce && p2 == cf) || (p1 == cf && p2 == ce))) violate("parts differ from C_e and C_(1-e)", {e});
  }
  if (A_.complement_metrics().connected) violate("complement is connected", {e});
  finish_counted(1);
}

inline void Checker::dist3() {
  if (gate_pq_baer_cp4()) return;
  std::size_t instances = 0;
  const auto nt = nontrivial_cp();
  for (ElementId e : nt)
    for (ElementId f : nt) {
      if (f <= e || R_.mul(e, f) != R_.zero() || R_.add(e, f) == R_.one()) continue;
      ++instances;
      const ElementId u = one_minus(e), w = one_minus(f);
      if (!G_.has_vertex(u) || !G_.has_vertex(w) || A_.distance(u, w) != 3) violate("d(1-e, 1-f) != 3", {e, f});
    }
  finish_counted(instances);
}

inline void Checker::comp_conn_cp6() {
  if (gate_pq_baer_cp4()) return;
  const bool connected = A_.complement_metrics().connected;
  const bool six = A_.lattice().size() >= 6;
  if (connected != six) violate(connected ? "complement connected with |CP| < 6" : "complement disconnected with |CP| >= 6",
                                A_.lattice().elements());
  finish_counted(1);
}

inline void Checker::universal_cp4() {
  if (gate_pq_baer_cp4()) return;
  std::size_t instances = 0;
  for (std::size_t i = 0; i < G_.vertex_count(); ++i)
    if (G_.degree_at(i) + 1 == G_.vertex_count()) {
      ++instances;
      if (A_.lattice().size() != 4) violate("universal vertex with |CP| != 4", {G_.vertex(i)});
    }
  finish_counted(instances);
}

inline void Checker::comp_girth() {
  if (gate_pq_baer_cp4()) return;
  if (A_.complement_metrics().connected) {
    gate(Gate::complement_connected);
    return;
  }
  const Length g = A_.complement_metrics().girth;
  if (!(g == 3 || g.is_infinite())) violate("complement girth is " + g.to_string(), {});
  finish_counted(1);
}

inline void Checker::trianglefree() {
  if (gate_pq_baer_cp4()) return;
  if (has_triangle(G_)) {
    gate(Gate::strong_graph_has_triangle);
    return;
  }
  std::size_t instances = 0;
  const auto& vs = G_.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      ++instances;
      const bool complementary = A_.cover(vs[i]) == one_minus(A_.cover(vs[j]));
      if (G_.adjacent_at(i, j) != complementary) violate("adjacency differs from C(a) = 1 - C(b)", {vs[i], vs[j]});
    }
  finish_counted(instances);
}

inline void Checker::girth_characterization() {
  if (gate_pq_baer()) return;
  const Length g = A_.strong_metrics().girth;
  const auto nt = nontrivial_cp();
  bool orthogonal_pair = false;
  for (ElementId e : nt)
    for (ElementId f : nt)
      if (e != f && R_.mul(e, f) == R_.zero() && R_.add(e, f) != R_.one()) orthogonal_pair = true;
  const bool chain = A_.lattice().has_chain_of_three_without_zero();
  if ((g == 3) != orthogonal_pair || orthogonal_pair != chain)
    violate("girth 3, orthogonal pair and 3-chain disagree: girth " + g.to_string(), A_.lattice().elements());
  bool balanced = false;
  for (ElementId e : nt)
    if (A_.cover_class_size(e) >= 2 && A_.cover_class_size(one_minus(e)) >= 2) balanced = true;
  const bool triangle_free = !has_triangle(G_);
  if ((g == 4) != (triangle_free && balanced))
    violate("girth 4 characterization fails: girth " + g.to_string(), A_.lattice().elements());
  finish_counted(1);
}

inline void Checker::comp_diam2_girth3() {
  if (gate_pq_baer_cp4()) return;
  const auto& m = A_.complement_metrics();
  if (!m.connected) {
    gate(Gate::complement_disconnected);
    return;
  }
  if (!(m.diameter == 2) || !(m.girth == 3))
    violate("complement diameter " + m.diameter.to_string() + ", girth " + m.girth.to_string(), {});
  finish_counted(1);
}

inline void Checker::not_complemented() {
  if (gate_pq_baer_cp4()) return;
  if (!A_.complement_metrics().connected) {
    gate(Gate::complement_disconnected);
    return;
  }
  if (is_complemented(A_.complement())) violate("connected complement is complemented", {});
  finish_counted(1);
}

inline void Checker::z3z3() {
  if (gate_pq_baer_cp4()) return;
  std::optional<ElementId> moved;
  for (ElementId a : G_.vertices())
    if (A_.cover(a) != a) {
      moved = a;
      break;
    }
  if (!moved) {
    gate(Gate::every_vertex_is_its_cover);
    return;
  }
  bool fingerprint = R_.order() == 9 && R_.characteristic() == 3 && A_.lattice().size() == 4;
  if (fingerprint) {
    const ElementId e = nontrivial_cp().front();
    fingerprint = A_.cover_class_size(e) == 2 && A_.cover_class_size(one_minus(e)) == 2;
  }
  const bool complemented = is_complemented(A_.complement());
  if (complemented != fingerprint)
    violate(complemented ? "complement complemented without the Z3 x Z3 fingerprint"
                         : "Z3 x Z3 fingerprint but complement not complemented",
            {*moved});
  finish_counted(1);
}

inline CheckResult Checker::run() {
  const auto start = std::chrono::steady_clock::now();
  switch (result_.id) {
    case TheoremId::prod_conn: prod_conn(); break;
    case TheoremId::central_conn: central_conn(); break;
    case TheoremId::split_ideal: split_ideal(); break;
    case TheoremId::side_ideal: side_ideal(); break;
    case TheoremId::nonzd_sum: nonzd_sum(); break;
    case TheoremId::cut_propmax: cut_propmax(); break;
    case TheoremId::side_idempotent: side_idempotent(); break;
    case TheoremId::cor_side: cor_side(); break;
    case TheoremId::cut_atom: cut_atom(); break;
    case TheoremId::cut_iff_pendant: cut_iff_pendant(); break;
    case TheoremId::ann_size_2: ann_size_2(); break;
    case TheoremId::cutset_clique: cutset_clique(); break;
    case TheoremId::dist_cover: dist_cover(); break;
    case TheoremId::cp4_bipartite: cp4_bipartite(); break;
    case TheoremId::dist3: dist3(); break;
    case TheoremId::comp_conn_cp6: comp_conn_cp6(); break;
    case TheoremId::universal_cp4: universal_cp4(); break;
    case TheoremId::comp_girth: comp_girth(); break;
    case TheoremId::trianglefree: trianglefree(); break;
    case TheoremId::girth: girth_characterization(); break;
    case TheoremId::comp_diam2_girth3: comp_diam2_girth3(); break;
    case TheoremId::not_complemented: not_complemented(); break;
    case TheoremId::z3z3: z3z3(); break;
  }
  result_.elapsed =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
  return result_;
}

}  // namespace detail

/// Evaluates one result on one ring: hypotheses first, then the conclusion.
inline CheckResult check(TheoremId id, const RingAnalysis& analysis) { return detail::Checker(analysis, id).run(); }

inline CheckResult check(TheoremId id, const FiniteStarRing& R) { return check(id, RingAnalysis(R)); }

inline std::vector<CheckResult> run_all(const RingAnalysis& analysis) {
  std::vector<CheckResult> out;
  for (const auto& t : kTheorems) out.push_back(check(t.id, analysis));
  return out;
}

/// Re-evaluates the hypothesis a result reported as unmet; true when it is indeed unmet.
inline bool replay_gate(const RingAnalysis& A, const CheckResult& r) {
  const auto& G = A.strong();
  switch (r.gate) {
    case Gate::none: return r.status != CheckStatus::hypothesis_not_met;
    case Gate::no_vertices: return G.vertex_count() == 0;
    case Gate::not_pq_baer: {
      if (!r.witness || r.witness->elements.size() != 1) return false;
      const ElementSet& ann = A.annihilators().ann_principal(r.witness->elements[0]);
      bool generated = false;
      projections(A.ring(), false).for_each([&](ElementId e) {
        generated = generated || A.annihilators().principal_ideal(e) == ann;
      });
      return !generated;
    }
    case Gate::few_central_projections: return projections(A.ring(), true).size() < 4;
    case Gate::not_a_product: return A.ring().kind() != RingKind::product;
    case Gate::factor_without_vertices: {
      if (A.ring().kind() != RingKind::product) return false;
      for (const auto& f : {A.ring().left_factor(), A.ring().right_factor()})
        if (build_graph(f, GraphKind::strong).vertex_count() == 0) return true;
      return false;
    }
    case Gate::no_nontrivial_central_projection: return projections(A.ring(), true).size() <= 2;
    case Gate::no_cut_vertex: return cut_vertices(G).empty();
    case Gate::too_few_vertices: return G.vertex_count() < 3;
    case Gate::cp_not_four: return projections(A.ring(), true).size() != 4;
    case Gate::complement_connected: return component_count(complement(G)) == 1;
    case Gate::complement_disconnected: return component_count(complement(G)) != 1;
    case Gate::strong_graph_has_triangle: return has_triangle(G);
    case Gate::every_vertex_is_its_cover: {
      for (ElementId a : G.vertices())
        if (central_cover(A.ring(), a) != a) return false;
      return true;
    }
  }
  return false;
}

}  // namespace starring
