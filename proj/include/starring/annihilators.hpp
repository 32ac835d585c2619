#pragma once

#include <starring/element_set.hpp>
#include <starring/ring.hpp>

#include <vector>

namespace starring {

/// r_R(B) = { x : bx = 0 for all b in B }; r_R(empty) = R.
inline ElementSet right_annihilator(const FiniteStarRing& R, const ElementSet& B) {
  ElementSet out(R.order());
  const auto n = static_cast<ElementId>(R.order());
  const auto members = B.to_vector();
  for (ElementId x = 0; x < n; ++x) {
    bool kills = true;
    for (ElementId b : members)
      if (R.mul(b, x) != R.zero()) {
        kills = false;
        break;
      }
    if (kills) out.insert(x);
  }
  return out;
}

/// l_R(B) = { x : xb = 0 for all b in B }; l_R(empty) = R.
inline ElementSet left_annihilator(const FiniteStarRing& R, const ElementSet& B) {
  ElementSet out(R.order());
  const auto n = static_cast<ElementId>(R.order());
  const auto members = B.to_vector();
  for (ElementId x = 0; x < n; ++x) {
    bool kills = true;
    for (ElementId b : members)
      if (R.mul(x, b) != R.zero()) {
        kills = false;
        break;
      }
    if (kills) out.insert(x);
  }
  return out;
}

/// aR = { ar : r in R }.
inline ElementSet principal_right_ideal(const FiniteStarRing& R, ElementId a) {
  ElementSet out(R.order());
  for (ElementId r = 0; r < R.order(); ++r) out.insert(R.mul(a, r));
  return out;
}

/// Per-element right annihilators r_R(a), principal right ideals aR and r_R(aR).
/// Built once per ring and read-only afterwards.
class AnnihilatorTable {
 public:
  explicit AnnihilatorTable(const FiniteStarRing& R) : ring_(R) {
    const auto n = static_cast<ElementId>(R.order());
    elem_.assign(n, ElementSet(n));
    ideal_.assign(n, ElementSet(n));
    for (ElementId a = 0; a < n; ++a)
      for (ElementId x = 0; x < n; ++x) {
        const ElementId ax = R.mul(a, x);
        if (ax == R.zero()) elem_[a].insert(x);
        ideal_[a].insert(ax);
      }
    // r_R(aR) is the intersection of r_R(s) over s in aR.
    principal_.assign(n, ElementSet(n));
    for (ElementId a = 0; a < n; ++a) {
      ElementSet acc = ElementSet::full(n);
      ideal_[a].for_each([&](ElementId s) { acc &= elem_[s]; });
      principal_[a] = std::move(acc);
    }
  }

  const FiniteStarRing& ring() const noexcept { return ring_; }
  /// r_R(a)
  const ElementSet& ann_elem(ElementId a) const { return elem_[a]; }
  /// r_R(aR)
  const ElementSet& ann_principal(ElementId a) const { return principal_[a]; }
  /// aR
  const ElementSet& principal_ideal(ElementId a) const { return ideal_[a]; }

 private:
  FiniteStarRing ring_;
  std::vector<ElementSet> elem_, ideal_, principal_;
};

/// r_R(aR), computed as the intersection of element annihilators over aR.
inline ElementSet right_ann_of_principal(const AnnihilatorTable& table, ElementId a) {
  return table.ann_principal(a);
}

inline ElementSet right_ann_of_principal(const FiniteStarRing& R, ElementId a) {
  ElementSet acc = ElementSet::full(R.order());
  principal_right_ideal(R, a).for_each([&](ElementId s) { acc &= right_annihilator(R, ElementSet(R.order(), {s})); });
  return acc;
}

/// True iff S is a two-sided ideal: contains 0, closed under + and negation, and absorbs R on both sides.
inline bool is_ideal(const FiniteStarRing& R, const ElementSet& S) {
  if (!S.contains(R.zero())) return false;
  const auto members = S.to_vector();
  for (ElementId x : members) {
    if (!S.contains(R.neg(x))) return false;
    for (ElementId y : members)
      if (!S.contains(R.add(x, y))) return false;
    for (ElementId r = 0; r < R.order(); ++r)
      if (!S.contains(R.mul(r, x)) || !S.contains(R.mul(x, r))) return false;
  }
  return true;
}

}  // namespace starring
