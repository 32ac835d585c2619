#include <starring/ring_spec.hpp>
#include <starring/validation.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdlib>
#include <set>

#include "oracles.hpp"

using namespace starring;

namespace {

ElementId mat(const FiniteStarRing& R, std::initializer_list<ElementId> e) {
  std::vector<ElementId> v(e);
  return R.matrix(v);
}

}  // namespace

TEST(Zmod, BasicArithmetic) {
  auto R = make_zmod(6);
  EXPECT_EQ(R.order(), 6u);
  EXPECT_EQ(R.one(), 1u);
  EXPECT_EQ(R.star(4), 4u);
  EXPECT_EQ(R.mul(2, 3), 0u);
  EXPECT_EQ(R.mul(4, 3), 0u);
  EXPECT_EQ(R.add(5, 4), 3u);
  EXPECT_EQ(R.neg(2), 4u);
  EXPECT_TRUE(R.involution_proper());
  EXPECT_EQ(R.label(5), "5");
  EXPECT_EQ(make_zmod(4).mul(2, 2), 0u);
}

TEST(Zmod, TablesMatchModularArithmetic) {
  for (unsigned n : {2u, 7u, 12u, 97u}) {
    auto R = make_zmod(n);
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b) {
        ASSERT_EQ(R.add(a, b), (a + b) % n);
        ASSERT_EQ(R.mul(a, b), (a * b) % n);
      }
  }
}

TEST(Zmod, RejectsTooSmallOrTooLarge) {
  EXPECT_THROW(make_zmod(1), InvalidArgument);
  EXPECT_THROW(make_zmod(5000), OrderLimitError);
  RingLimits small{10};
  EXPECT_THROW(make_zmod(11, small), OrderLimitError);
  EXPECT_NO_THROW(make_zmod(10, small));
}

TEST(Product, ComponentwiseOperations) {
  auto R = make_product(make_zmod(2), make_zmod(4));
  EXPECT_EQ(R.order(), 8u);
  EXPECT_EQ(R.mul(R.pair(1, 0), R.pair(0, 2)), R.zero());
  EXPECT_EQ(R.label(R.pair(1, 2)), "(1,2)");
  EXPECT_EQ(R.element("(0, 3)"), R.pair(0, 3));

  auto S = make_product(make_zmod(3), make_zmod(3));
  EXPECT_EQ(S.order(), 9u);
  EXPECT_EQ(S.label(S.one()), "(1,1)");
}

TEST(Product, NestedTuplesAreFlat) {
  auto R = build_ring("Z2 x Z2 x Z2");
  EXPECT_EQ(R.order(), 8u);
  const ElementId a = R.element("(1,0,0)"), b = R.element("(0,1,0)");
  EXPECT_EQ(R.mul(a, b), R.zero());
  EXPECT_EQ(R.label(R.one()), "(1,1,1)");
}

TEST(Product, ProjectsOntoFactors) {
  for (auto [l, r] : std::vector<std::pair<unsigned, unsigned>>{{2, 4}, {3, 6}, {4, 9}, {8, 8}}) {
    auto L = make_zmod(l), Rr = make_zmod(r);
    auto P = make_product(L, Rr);
    for (ElementId x = 0; x < P.order(); ++x)
      for (ElementId y = 0; y < P.order(); ++y) {
        auto [xl, xr] = P.components(x);
        auto [yl, yr] = P.components(y);
        ASSERT_EQ(P.components(P.add(x, y)), std::make_pair(L.add(xl, yl), Rr.add(xr, yr)));
        ASSERT_EQ(P.components(P.mul(x, y)), std::make_pair(L.mul(xl, yl), Rr.mul(xr, yr)));
      }
  }
}

TEST(Matrix, TransposeExamples) {
  auto R = build_ring("M2(Z6)");
  EXPECT_EQ(R.involution(), Involution::transpose);
  EXPECT_TRUE(R.involution_proper());
  const ElementId a = mat(R, {0, 2, 0, 2}), b = mat(R, {2, 0, 2, 0}), c = mat(R, {3, 3, 3, 3});
  EXPECT_EQ(R.label(a), "[[0,2],[0,2]]");
  EXPECT_TRUE(oracle::arb_star_zero(R, a, c));
  EXPECT_EQ(R.mul(a, R.star(b)), R.zero());
  EXPECT_FALSE(oracle::arb_star_zero(R, a, b));
}

TEST(Matrix, MultiplicationMatchesDefinition) {
  auto R = build_ring("M2(Z4)");
  auto B = R.matrix_base();
  for (ElementId x = 0; x < R.order(); x += 7)
    for (ElementId y = 0; y < R.order(); y += 5) {
      auto ex = R.entries(x), ey = R.entries(y), ez = R.entries(R.mul(x, y));
      for (unsigned i = 0; i < 2; ++i)
        for (unsigned j = 0; j < 2; ++j) {
          ElementId s = 0;
          for (unsigned k = 0; k < 2; ++k) s = B.add(s, B.mul(ex[i * 2 + k], ey[k * 2 + j]));
          ASSERT_EQ(ez[i * 2 + j], s);
        }
      auto et = R.entries(R.star(x));
      ASSERT_EQ(et[1], ex[2]);
      ASSERT_EQ(et[2], ex[1]);
    }
}

TEST(Matrix, OneByOneIdentityIsProper) {
  auto R = make_matrix_ring(make_zmod(2), 1, Involution::identity);
  EXPECT_EQ(R.order(), 2u);
  EXPECT_TRUE(R.involution_proper());
}

TEST(Matrix, IdentityTagOnM2IsPseudoInvolution) {
  auto R = build_ring("M2(Z6)@id");
  EXPECT_FALSE(R.involution_proper());
  ASSERT_TRUE(R.anti_multiplicative_defect());
  auto [x, y] = *R.anti_multiplicative_defect();
  EXPECT_NE(R.star(R.mul(x, y)), R.mul(R.star(y), R.star(x)));
}

TEST(Matrix, RejectsNoncommutativeBase) {
  EXPECT_THROW(build_ring("M2(M2(Z2))"), NoncommutativeBaseError);
}

TEST(Matrix, OrderLimit) {
  EXPECT_THROW(build_ring("M2(Z7)"), OrderLimitError);
  EXPECT_NO_THROW(build_ring("M2(Z7)", RingLimits{2401}));
}

TEST(Ring, OrderLimitFromEnvironment) {
  ::setenv("STARRING_MAX_ORDER", "50", 1);
  EXPECT_EQ(RingLimits::from_environment().max_order, 50u);
  EXPECT_THROW(build_ring("Z60"), OrderLimitError);
  ::unsetenv("STARRING_MAX_ORDER");
  EXPECT_EQ(RingLimits::from_environment().max_order, 2048u);
}

TEST(Ring, BasicInvariantsOnEveryCorpusRing) {
  for (const auto& spec : enumerate(CorpusSpec{})) {
    auto R = build_ring(spec);
    std::set<std::string> labels;
    for (ElementId a = 0; a < R.order(); ++a) {
      ASSERT_EQ(R.add(a, R.zero()), a) << spec.to_string();
      ASSERT_EQ(R.mul(a, R.one()), a) << spec.to_string();
      ASSERT_EQ(R.mul(R.one(), a), a) << spec.to_string();
      ASSERT_EQ(R.star(R.star(a)), a) << spec.to_string();
      labels.insert(R.label(a));
    }
    ASSERT_EQ(labels.size(), R.order()) << "labels not injective on " << spec.to_string();
  }
}

TEST(Ring, ProperInvolutionsAreAntiMultiplicative) {
  for (const char* s : {"Z12", "Z2 x Z6", "M2(Z2)", "M2(Z3)", "M2(Z4)"}) {
    auto R = build_ring(s);
    ASSERT_TRUE(R.involution_proper()) << s;
    for (ElementId a = 0; a < R.order(); ++a)
      for (ElementId b = 0; b < R.order(); ++b)
        ASSERT_EQ(R.star(R.mul(a, b)), R.mul(R.star(b), R.star(a))) << s;
  }
}

TEST(Validation, ZmodPassesEverything) {
  auto rep = validate_star_ring(make_zmod(6));
  EXPECT_TRUE(rep.all_hold());
  EXPECT_TRUE(rep.triples_exhaustive);
}

TEST(Validation, IdentityOnM2Z6FailsOnlyAntiMultiplicativity) {
  auto R = build_ring("M2(Z6)@id");
  ValidationOptions opt;
  opt.sampled_triples = 20'000;
  auto rep = validate_star_ring(R, opt);
  EXPECT_FALSE(rep.triples_exhaustive);
  const auto& anti = rep[Axiom::star_anti_multiplicative];
  ASSERT_FALSE(anti.holds);
  ASSERT_EQ(anti.witness.size(), 2u);
  const ElementId x = anti.witness[0], y = anti.witness[1];
  EXPECT_NE(R.star(R.mul(x, y)), R.mul(R.star(y), R.star(x)));
  for (Axiom a : kAllAxioms) {
    if (a != Axiom::star_anti_multiplicative) { EXPECT_TRUE(rep[a].holds) << to_string(a); }
  }
}

TEST(Validation, TransposeOnM2Z6PassesEverything) {
  ValidationOptions opt;
  opt.sampled_triples = 20'000;
  EXPECT_TRUE(validate_star_ring(build_ring("M2(Z6)"), opt).all_hold());
}

TEST(Validation, ExhaustiveOnSmallRings) {
  for (const char* s : {"Z2 x Z2 x Z2", "Z3 x Z3", "M2(Z2)", "M2(Z2)@id"}) {
    auto rep = validate_star_ring(build_ring(s));
    EXPECT_TRUE(rep.triples_exhaustive) << s;
    EXPECT_EQ(rep.all_hold(), std::string(s) != "M2(Z2)@id") << s;
  }
}

TEST(Parser, Examples) {
  EXPECT_EQ(parse_ring_spec("Z6"), RingSpec::zmod(6));
  EXPECT_EQ(parse_ring_spec("M2(Z6)@id"), RingSpec::matrix(2, RingSpec::zmod(6), Involution::identity));
  EXPECT_EQ(parse_ring_spec("Z2 x Z2 x Z2"),
            RingSpec::product(RingSpec::zmod(2), RingSpec::product(RingSpec::zmod(2), RingSpec::zmod(2))));
  EXPECT_EQ(parse_ring_spec("m2(z4)").involution, Involution::transpose);
  EXPECT_EQ(parse_ring_spec(" M2 ( Z4 ) @ TRANSPOSE "), parse_ring_spec("M2(Z4)"));
  EXPECT_EQ(parse_ring_spec("z2X z3"), parse_ring_spec("Z2 x Z3"));
}

TEST(Parser, ParenthesesGroupProducts) {
  auto s = parse_ring_spec("(Z2 x Z2) x Z3");
  ASSERT_EQ(s.kind, RingKind::product);
  EXPECT_EQ(s.children[0].kind, RingKind::product);
  EXPECT_EQ(s.to_string(), "(Z2 x Z2) x Z3");
  EXPECT_EQ(parse_ring_spec(s.to_string()), s);
}

TEST(Parser, RoundTripsEveryCorpusDescriptor) {
  for (const auto& spec : enumerate(CorpusSpec{})) {
    EXPECT_EQ(parse_ring_spec(spec.to_string()), spec);
    if (spec_order(spec) <= 256) {
      EXPECT_EQ(build_ring(spec).descriptor(), spec.to_string());
    }
  }
}

TEST(Parser, ErrorsCarryPosition) {
  try {
    parse_ring_spec("Z2 x Q3");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  EXPECT_THROW(parse_ring_spec(""), ParseError);
  EXPECT_THROW(parse_ring_spec("Z"), ParseError);
  EXPECT_THROW(parse_ring_spec("M2(Z6"), ParseError);
  EXPECT_THROW(parse_ring_spec("M2(Z6)@star"), ParseError);
  EXPECT_THROW(parse_ring_spec("Z6 Z6"), ParseError);
}
