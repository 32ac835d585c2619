#include <starring/corpus.hpp>
#include <starring/ring_spec.hpp>
#include <starring/theorems.hpp>

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

using namespace starring;

namespace {

CorpusSpec medium_corpus() {
  CorpusSpec c;
  c.zmod_max = 60;
  c.product_order_max = 128;
  c.matrix_moduli = {2, 3};
  return c;
}

}  // namespace

TEST(TheoremIds, CodesAreUniqueAndResolve) {
  std::set<std::string_view> codes;
  for (const auto& t : kTheorems) {
    codes.insert(t.code);
    EXPECT_EQ(theorem_from_code(t.code), t.id);
    EXPECT_EQ(&info(t.id), &t);
    EXPECT_FALSE(t.statement.empty());
  }
  EXPECT_EQ(codes.size(), 23u);
  EXPECT_FALSE(theorem_from_code("TH-NOPE"));
}

TEST(Checks, ComplementConnectivityExamples) {
  EXPECT_EQ(check(TheoremId::comp_conn_cp6, build_ring("Z2 x Z2 x Z2")).status, CheckStatus::holds);
  EXPECT_EQ(check(TheoremId::comp_conn_cp6, make_zmod(6)).status, CheckStatus::holds);
  for (const char* s : {"Z2 x Z2 x Z2 x Z2", "Z2 x Z2 x Z3"}) {
    RingAnalysis A(build_ring(s));
    EXPECT_GE(A.lattice().size(), 6u) << s;
    EXPECT_TRUE(A.complement_metrics().connected) << s;
    auto r = check(TheoremId::comp_conn_cp6, A);
    EXPECT_EQ(r.status, CheckStatus::holds) << s;
    EXPECT_FALSE(r.vacuous) << s;
  }
}

TEST(Checks, GateFiresBeforeConclusion) {
  RingAnalysis A(build_ring("Z2 x Z4"));
  ASSERT_FALSE(A.cut_vertices().empty());
  ASSERT_FALSE(A.pendants().empty());
  auto r = check(TheoremId::cut_iff_pendant, A);
  EXPECT_EQ(r.status, CheckStatus::hypothesis_not_met);
  EXPECT_EQ(r.hypothesis(), "not p.q.-Baer");
  ASSERT_TRUE(r.witness);
  ASSERT_EQ(r.witness->elements.size(), 1u);
  EXPECT_EQ(A.ring().label(r.witness->elements[0]), "(0,2)");
  EXPECT_TRUE(replay_gate(A, r));
}

TEST(Checks, CutAtomVacuousOnK80_15) {
  auto r = check(TheoremId::cut_atom, build_ring("M2(Z6)@id"));
  EXPECT_EQ(r.status, CheckStatus::holds);
  EXPECT_TRUE(r.vacuous);
}

TEST(Checks, CutIffPendantWithActualPendant) {
  RingAnalysis A(build_ring("Z2 x Z6"));
  ASSERT_FALSE(A.pendants().empty());
  auto r = check(TheoremId::cut_iff_pendant, A);
  EXPECT_EQ(r.status, CheckStatus::holds);
  EXPECT_FALSE(r.vacuous);
}

TEST(Checks, RunAllOnZ3xZ3) {
  RingAnalysis A(build_ring("Z3 x Z3"));
  auto rs = run_all(A);
  ASSERT_EQ(rs.size(), 23u);
  const auto& z = rs[static_cast<std::size_t>(TheoremId::z3z3)];
  EXPECT_EQ(z.status, CheckStatus::holds);
  EXPECT_FALSE(z.vacuous);
  EXPECT_EQ(rs[static_cast<std::size_t>(TheoremId::comp_conn_cp6)].status, CheckStatus::holds);
  for (const auto& r : rs) EXPECT_NE(r.status, CheckStatus::violated) << code(r.id);
}

TEST(Checks, FieldHasNothingToCheck) {
  for (const auto& r : run_all(RingAnalysis(make_zmod(7)))) {
    EXPECT_TRUE(r.status == CheckStatus::hypothesis_not_met || r.vacuous) << code(r.id);
    EXPECT_NE(r.status, CheckStatus::violated);
  }
}

TEST(Checks, NonzdSumGatedOnZ4) {
  auto r = check(TheoremId::nonzd_sum, make_zmod(4));
  EXPECT_EQ(r.status, CheckStatus::hypothesis_not_met);
  EXPECT_EQ(r.gate, Gate::no_cut_vertex);
}

TEST(Checks, ProductConnectivityUsesFactors) {
  auto r = check(TheoremId::prod_conn, build_ring("Z4 x Z6"));
  EXPECT_EQ(r.status, CheckStatus::holds);
  EXPECT_FALSE(r.vacuous);
  EXPECT_EQ(check(TheoremId::prod_conn, build_ring("Z2 x Z6")).gate, Gate::factor_without_vertices);
  EXPECT_EQ(check(TheoremId::prod_conn, make_zmod(12)).gate, Gate::not_a_product);
}

TEST(Checks, SideIdealNeedsALoopedNeighbour) {
  // Read literally (X - a complete is enough), the statement fails on Z6: a = 3, X = {2, 3}
  // and {0, 2, 3} is not an ideal. Here 2 is not looped (2 R 2 != 0), so the check skips it.
  auto R = make_zmod(6);
  EXPECT_FALSE(is_ideal(R, ElementSet(6, {0, 2, 3})));
  EXPECT_FALSE(oracle::arb_star_zero(R, 2, 2));
  auto r = check(TheoremId::side_ideal, R);
  EXPECT_EQ(r.status, CheckStatus::holds);
  EXPECT_TRUE(r.vacuous);

  // Z2 x Z4 has the looped vertex (0,2) next to the cut vertex (1,0).
  auto p = check(TheoremId::side_ideal, build_ring("Z2 x Z4"));
  EXPECT_EQ(p.status, CheckStatus::holds);
  EXPECT_FALSE(p.vacuous);
}

TEST(Checks, CorSideFindsEvidenceOnZ2xZ5) {
  RingAnalysis A(build_ring("Z2 x Z5"));
  auto r = check(TheoremId::cor_side, A);
  EXPECT_EQ(r.status, CheckStatus::holds);
  EXPECT_FALSE(r.vacuous);
}

TEST(Checks, GatesReplayOnMediumCorpus) {
  for (const auto& spec : enumerate(medium_corpus())) {
    RingAnalysis A(build_ring(spec));
    for (const auto& r : run_all(A)) {
      ASSERT_NE(r.status, CheckStatus::violated) << code(r.id) << " on " << spec.to_string();
      if (r.status == CheckStatus::hypothesis_not_met) {
        ASSERT_NE(r.gate, Gate::none);
        ASSERT_TRUE(replay_gate(A, r)) << code(r.id) << " on " << spec.to_string() << ": " << r.hypothesis();
      } else {
        ASSERT_EQ(r.gate, Gate::none);
      }
    }
  }
}

TEST(Checks, StrongGraphOfPqBaerRingsUsesCovers) {
  for (const auto& spec : enumerate(medium_corpus())) {
    RingAnalysis A(build_ring(spec));
    if (!A.classification().is_pq_baer) continue;
    const auto& G = A.strong();
    const auto& R = A.ring();
    for (std::size_t i = 0; i < G.vertex_count(); ++i)
      for (std::size_t j = i + 1; j < G.vertex_count(); ++j)
        ASSERT_EQ(G.adjacent_at(i, j), R.mul(A.cover(G.vertex(i)), A.cover(G.vertex(j))) == 0) << spec.to_string();
  }
}

TEST(Converse, SideIdealFirstFailsOnZ2xZ4) {
  auto w = find_converse_counterexample(TheoremId::side_ideal, CorpusSpec{});
  ASSERT_TRUE(w);
  EXPECT_EQ(w->spec, "Z2 x Z4");
  auto R = build_ring(w->spec);
  std::set<std::string> x;
  for (ElementId e : w->witness.elements) x.insert(R.label(e));
  EXPECT_EQ(x, (std::set<std::string>{"(1,0)", "(0,2)", "(1,2)"}));
  auto g = build_graph(R, GraphKind::strong);
  EXPECT_FALSE(is_clique(g, w->witness.elements));
  ElementSet ideal = ElementSet::from(R.order(), w->witness.elements);
  ideal.insert(0);
  EXPECT_TRUE(is_ideal(R, ideal));
}

TEST(Converse, NonzdSumFirstFailsOnZ4) {
  auto w = find_converse_counterexample(TheoremId::nonzd_sum, CorpusSpec{});
  ASSERT_TRUE(w);
  EXPECT_EQ(w->spec, "Z4");
  EXPECT_EQ(w->witness.elements, (std::vector<ElementId>{2}));
}

TEST(Converse, CutPropmax) {
  // Z4 (a = 2) comes first in canonical order; Z6 with a = 4 is another instance.
  auto w = find_converse_counterexample(TheoremId::cut_propmax, CorpusSpec{});
  ASSERT_TRUE(w);
  EXPECT_EQ(w->spec, "Z4");
  EXPECT_EQ(w->witness.elements, (std::vector<ElementId>{2}));
  RingAnalysis z6(make_zmod(6));
  EXPECT_TRUE(is_properly_maximal(z6.annihilators(), 4));
  EXPECT_FALSE(z6.cut_vertices().contains(4));
}

TEST(Converse, CutAtom) {
  auto w = find_converse_counterexample(TheoremId::cut_atom, CorpusSpec{});
  ASSERT_TRUE(w);
  EXPECT_EQ(w->spec, "Z2 x Z2");
  RingAnalysis k(build_ring("M2(Z6)@id"));
  auto local = converse_counterexample(TheoremId::cut_atom, k);
  ASSERT_TRUE(local);
  EXPECT_TRUE(k.lattice().contains(local->elements[0]));
}

TEST(Converse, RejectsIdsWithoutFinder) {
  EXPECT_FALSE(has_converse(TheoremId::girth));
  EXPECT_THROW(find_converse_counterexample(TheoremId::girth, CorpusSpec{}), InvalidArgument);
}

TEST(Corpus, DefaultEnumeration) {
  auto specs = enumerate(CorpusSpec{});
  std::set<std::string> names;
  for (const auto& s : specs) names.insert(s.to_string());
  EXPECT_EQ(names.size(), specs.size());
  for (const char* s : {"Z2", "Z100", "Z2 x Z4", "Z2 x Z2 x Z2 x Z2", "Z2 x Z2 x Z3", "Z3 x Z3", "M2(Z6)@id",
                        "M2(Z6)@transpose", "M2(Z2)@id"})
    EXPECT_TRUE(names.count(s)) << s;
  EXPECT_FALSE(names.count("Z101"));
  EXPECT_FALSE(names.count("Z4 x Z2"));
  for (std::size_t i = 1; i < specs.size(); ++i) EXPECT_LE(spec_order(specs[i - 1]), spec_order(specs[i]));
  for (const auto& s : specs)
    if (s.kind == RingKind::product) { EXPECT_LE(spec_order(s), 256u); }
}

TEST(Corpus, RunIsDeterministicAcrossJobCounts) {
  auto c = medium_corpus();
  auto a = run_corpus(c, 1);
  auto b = run_corpus(c, 3);
  EXPECT_EQ(a.table(), b.table());
  EXPECT_TRUE(a.ok());
  ASSERT_EQ(a.rings.size(), b.rings.size());
  for (std::size_t i = 0; i < a.rings.size(); ++i) EXPECT_EQ(a.rings[i].spec, b.rings[i].spec);
}

TEST(Corpus, VisitorSeesEveryRing) {
  auto c = medium_corpus();
  std::mutex m;
  std::set<std::string> seen;
  run_corpus(c, 2, [&](const RingSpec& s, const RingAnalysis&) {
    std::lock_guard lock(m);
    seen.insert(s.to_string());
  });
  EXPECT_EQ(seen.size(), enumerate(c).size());
}

TEST(Corpus, OrderLimitDuringEnumerationIsReported) {
  ::setenv("STARRING_MAX_ORDER", "100", 1);
  CorpusSpec c;
  ::unsetenv("STARRING_MAX_ORDER");
  c.zmod_max = 10;
  c.factors = {};
  c.matrix_moduli = {4};
  EXPECT_EQ(c.order_cap, 100u);
  EXPECT_THROW(run_corpus(c, 1), OrderLimitError);
  c.matrix_moduli = {3};
  EXPECT_NO_THROW(run_corpus(c, 1));
  c.zmod_max = 101;
  EXPECT_THROW(run_corpus(c, 1), OrderLimitError);
}
