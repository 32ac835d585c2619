#pragma once

#include <starring/ring.hpp>

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace starring {

enum class Axiom {
  additive_group,
  mul_associative,
  distributive,
  mul_identity,
  star_additive,
  star_period_two,
  star_anti_multiplicative,
};

inline constexpr std::array<Axiom, 7> kAllAxioms = {
    Axiom::additive_group,  Axiom::mul_associative, Axiom::distributive,
    Axiom::mul_identity,    Axiom::star_additive,   Axiom::star_period_two,
    Axiom::star_anti_multiplicative,
};

inline const char* to_string(Axiom a) {
  switch (a) {
    case Axiom::additive_group: return "additive_group";
    case Axiom::mul_associative: return "mul_associative";
    case Axiom::distributive: return "distributive";
    case Axiom::mul_identity: return "mul_identity";
    case Axiom::star_additive: return "star_additive";
    case Axiom::star_period_two: return "star_period_two";
    case Axiom::star_anti_multiplicative: return "star_anti_multiplicative";
  }
  return "?";
}

struct AxiomResult {
  Axiom axiom;
  bool holds = true;
  /// First failing tuple (one, two or three elements depending on the axiom).
  std::vector<ElementId> witness;
};

struct ValidationReport {
  std::vector<AxiomResult> results;
  /// False when the triple axioms were checked on a random sample.
  bool triples_exhaustive = true;

  const AxiomResult& operator[](Axiom a) const { return results[static_cast<std::size_t>(a)]; }
  bool all_hold() const {
    for (const auto& r : results)
      if (!r.holds) return false;
    return true;
  }
};

struct ValidationOptions {
  /// Triple axioms are exhaustive up to this order and sampled above it.
  std::size_t exhaustive_triple_order = 64;
  std::size_t sampled_triples = 1'000'000;
  std::uint64_t seed = 0x5eed5eedULL;
};

namespace detail {

inline void fail(AxiomResult& r, std::vector<ElementId> witness) {
  if (!r.holds) return;
  r.holds = false;
  r.witness = std::move(witness);
}

inline void check_triple(const FiniteStarRing& R, ElementId x, ElementId y, ElementId z,
                         ValidationReport& rep) {
  auto& assoc_add = rep.results[static_cast<std::size_t>(Axiom::additive_group)];
  auto& assoc = rep.results[static_cast<std::size_t>(Axiom::mul_associative)];
  auto& dist = rep.results[static_cast<std::size_t>(Axiom::distributive)];
  if (R.add(R.add(x, y), z) != R.add(x, R.add(y, z))) fail(assoc_add, {x, y, z});
  if (R.mul(R.mul(x, y), z) != R.mul(x, R.mul(y, z))) fail(assoc, {x, y, z});
  if (R.mul(x, R.add(y, z)) != R.add(R.mul(x, y), R.mul(x, z)) ||
      R.mul(R.add(y, z), x) != R.add(R.mul(y, x), R.mul(z, x)))
    fail(dist, {x, y, z});
}

}  // namespace detail

/// Checks every ring and involution axiom. Unary and binary axioms are always exhaustive;
/// associativity and distributivity fall back to seeded sampling above the configured order.
inline ValidationReport validate_star_ring(const FiniteStarRing& R, const ValidationOptions& opt = {}) {
  ValidationReport rep;
  for (Axiom a : kAllAxioms) rep.results.push_back({a, true, {}});
  auto slot = [&](Axiom a) -> AxiomResult& { return rep.results[static_cast<std::size_t>(a)]; };
  const auto n = static_cast<ElementId>(R.order());

  for (ElementId a = 0; a < n; ++a) {
    if (R.add(a, R.zero()) != a || R.add(a, R.neg(a)) != R.zero()) detail::fail(slot(Axiom::additive_group), {a});
    if (R.mul(a, R.one()) != a || R.mul(R.one(), a) != a) detail::fail(slot(Axiom::mul_identity), {a});
    if (R.star(R.star(a)) != a) detail::fail(slot(Axiom::star_period_two), {a});
    for (ElementId b = 0; b < n; ++b) {
      if (R.add(a, b) != R.add(b, a)) detail::fail(slot(Axiom::additive_group), {a, b});
      if (R.star(R.add(a, b)) != R.add(R.star(a), R.star(b))) detail::fail(slot(Axiom::star_additive), {a, b});
      if (R.star(R.mul(a, b)) != R.mul(R.star(b), R.star(a)))
        detail::fail(slot(Axiom::star_anti_multiplicative), {a, b});
    }
  }

  if (R.order() <= opt.exhaustive_triple_order) {
    for (ElementId x = 0; x < n; ++x)
      for (ElementId y = 0; y < n; ++y)
        for (ElementId z = 0; z < n; ++z) detail::check_triple(R, x, y, z, rep);
  } else {
    rep.triples_exhaustive = false;
    std::mt19937_64 gen(opt.seed);
    std::uniform_int_distribution<ElementId> pick(0, n - 1);
    for (std::size_t i = 0; i < opt.sampled_triples; ++i) {
      const ElementId x = pick(gen), y = pick(gen), z = pick(gen);
      detail::check_triple(R, x, y, z, rep);
    }
  }
  return rep;
}

}  // namespace starring
