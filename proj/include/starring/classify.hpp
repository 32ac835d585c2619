#pragma once

#include <starring/annihilators.hpp>
#include <starring/projections.hpp>

#include <map>
#include <optional>
#include <vector>

namespace starring {

/// Rickart / Baer / quasi-Baer / p.q.-Baer / semiproper classification of a *-ring.
/// Every false predicate carries a witness: a single element, or for Baer and quasi-Baer the
/// generators whose annihilator intersection is not generated by a projection.
struct ClassificationReport {
  bool is_rickart = false;
  bool is_baer = false;
  bool is_quasi_baer = false;
  bool is_pq_baer = false;
  bool is_semiproper = false;

  std::optional<ElementId> rickart_witness;
  std::vector<ElementId> baer_witness;
  std::vector<ElementId> quasi_baer_witness;
  std::optional<ElementId> pq_baer_witness;
  std::optional<ElementId> semiproper_witness;
};

namespace detail {

// Intersection-closure of a family of right ideals; finds a member that is not eR for any
// given generating set. Each closure member remembers one generating list of elements.
inline std::optional<std::vector<ElementId>> closure_defect(const std::vector<ElementSet>& family,
                                                           const std::vector<ElementSet>& generated) {
  std::map<ElementSet, std::vector<ElementId>> seen;
  auto generated_by_projection = [&](const ElementSet& s) {
    for (const auto& g : generated)
      if (g == s) return true;
    return false;
  };
  std::vector<ElementSet> frontier;
  for (ElementId a = 0; a < family.size(); ++a)
    if (seen.emplace(family[a], std::vector<ElementId>{a}).second) frontier.push_back(family[a]);
  while (!frontier.empty()) {
    for (const auto& s : frontier)
      if (!generated_by_projection(s)) return seen.at(s);
    std::vector<ElementSet> next;
    const std::vector<std::pair<ElementSet, std::vector<ElementId>>> base(seen.begin(), seen.end());
    for (const auto& s : frontier)
      for (const auto& [t, gens] : base) {
        ElementSet m = s & t;
        if (seen.count(m)) continue;
        auto merged = seen.at(s);
        merged.insert(merged.end(), gens.begin(), gens.end());
        seen.emplace(m, std::move(merged));
        next.push_back(std::move(m));
      }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace detail

inline ClassificationReport classify(const AnnihilatorTable& table) {
  const FiniteStarRing& R = table.ring();
  const auto n = static_cast<ElementId>(R.order());
  ClassificationReport rep;

  std::vector<ElementSet> generated;
  projections(R, false).for_each([&](ElementId e) { generated.push_back(table.principal_ideal(e)); });
  auto is_generated = [&](const ElementSet& s) {
    for (const auto& g : generated)
      if (g == s) return true;
    return false;
  };

  rep.is_rickart = true;
  rep.is_pq_baer = true;
  rep.is_semiproper = true;
  for (ElementId a = 0; a < n; ++a) {
    if (rep.is_rickart && !is_generated(table.ann_elem(a))) {
      rep.is_rickart = false;
      rep.rickart_witness = a;
    }
    if (rep.is_pq_baer && !is_generated(table.ann_principal(a))) {
      rep.is_pq_baer = false;
      rep.pq_baer_witness = a;
    }
    // aRa* = 0 exactly when a* lies in r_R(aR).
    if (rep.is_semiproper && a != R.zero() && table.ann_principal(a).contains(R.star(a))) {
      rep.is_semiproper = false;
      rep.semiproper_witness = a;
    }
  }

  if (!rep.is_rickart) {
    rep.baer_witness = {*rep.rickart_witness};
  } else {
    std::vector<ElementSet> family;
    for (ElementId a = 0; a < n; ++a) family.push_back(table.ann_elem(a));
    auto defect = detail::closure_defect(family, generated);
    rep.is_baer = !defect;
    if (defect) rep.baer_witness = *defect;
  }

  if (!rep.is_pq_baer) {
    rep.quasi_baer_witness = {*rep.pq_baer_witness};
  } else {
    std::vector<ElementSet> family;
    for (ElementId a = 0; a < n; ++a) family.push_back(table.ann_principal(a));
    auto defect = detail::closure_defect(family, generated);
    rep.is_quasi_baer = !defect;
    if (defect) rep.quasi_baer_witness = *defect;
  }
  return rep;
}

inline ClassificationReport classify(const FiniteStarRing& R) { return classify(AnnihilatorTable(R)); }

/// r_R(aR) is properly maximal when it is strictly contained in no r_R(bR) for b outside {0, a}.
/// Equal annihilators are allowed: in Z6, r(4R) = r(2R) = {0, 3} and r(4R) is properly maximal.
inline bool is_properly_maximal(const AnnihilatorTable& table, ElementId a) {
  const FiniteStarRing& R = table.ring();
  if (a == R.zero()) throw InvalidArgument("properly maximal is defined for nonzero elements only");
  const ElementSet& ra = table.ann_principal(a);
  for (ElementId b = 0; b < R.order(); ++b) {
    if (b == R.zero() || b == a) continue;
    const ElementSet& rb = table.ann_principal(b);
    if (ra != rb && ra.is_subset_of(rb)) return false;
  }
  return true;
}

inline bool is_properly_maximal(const FiniteStarRing& R, ElementId a) {
  return is_properly_maximal(AnnihilatorTable(R), a);
}

}  // namespace starring
