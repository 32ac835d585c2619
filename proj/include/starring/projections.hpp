#pragma once

#include <starring/element_set.hpp>
#include <starring/error.hpp>
#include <starring/ring.hpp>

#include <algorithm>
#include <span>
#include <vector>

namespace starring {

inline bool is_projection(const FiniteStarRing& R, ElementId e) {
  return R.mul(e, e) == e && R.star(e) == e;
}

inline bool is_central(const FiniteStarRing& R, ElementId e) {
  for (ElementId x = 0; x < R.order(); ++x)
    if (R.mul(e, x) != R.mul(x, e)) return false;
  return true;
}

/// All projections (e^2 = e = e*); with central_only, only those commuting with every element.
inline ElementSet projections(const FiniteStarRing& R, bool central_only) {
  ElementSet out(R.order());
  for (ElementId e = 0; e < R.order(); ++e)
    if (is_projection(R, e) && (!central_only || is_central(R, e))) out.insert(e);
  return out;
}

/// Smallest central projection h with ha = a, given the central projections of R.
/// C(0) is 0 by convention. Throws NoCentralCover if the meet of all covering projections
/// fails to cover a.
inline ElementId central_cover(const FiniteStarRing& R, std::span<const ElementId> central_projections, ElementId a) {
  if (a == R.zero()) return R.zero();
  ElementId meet = R.one();
  for (ElementId h : central_projections)
    if (R.mul(h, a) == a) meet = R.mul(meet, h);
  if (R.mul(meet, a) != a) throw NoCentralCover("element " + R.label(a) + " has no central cover");
  return meet;
}

inline ElementId central_cover(const FiniteStarRing& R, ElementId a) {
  const auto cp = projections(R, true).to_vector();
  return central_cover(R, cp, a);
}

/// C(a) for every element of a ring.
class CentralCoverMap {
 public:
  CentralCoverMap() = default;
  CentralCoverMap(const FiniteStarRing& R, std::span<const ElementId> central_projections) {
    cover_.resize(R.order());
    for (ElementId a = 0; a < R.order(); ++a) cover_[a] = central_cover(R, central_projections, a);
  }

  ElementId operator()(ElementId a) const { return cover_.at(a); }
  std::size_t size() const noexcept { return cover_.size(); }

 private:
  std::vector<ElementId> cover_;
};

/// Central projections ordered by e <= f iff e = ef = fe, with meet ef and join e + f - ef.
class CentralProjectionLattice {
 public:
  CentralProjectionLattice(const FiniteStarRing& R, std::vector<ElementId> elements)
      : ring_(R), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    for (ElementId e : elements_)
      for (ElementId f : elements_)
        if (!contains(meet(e, f)) || !contains(join(e, f)))
          throw InvalidArgument("central projections of " + R.descriptor() + " are not closed under meet/join");
    for (ElementId e : elements_) {
      if (e == R.zero()) continue;
      bool minimal = true;
      for (ElementId f : elements_)
        if (f != R.zero() && f != e && leq(f, e)) {
          minimal = false;
          break;
        }
      if (minimal) atoms_.push_back(e);
    }
  }

  explicit CentralProjectionLattice(const FiniteStarRing& R)
      : CentralProjectionLattice(R, projections(R, true).to_vector()) {}

  const std::vector<ElementId>& elements() const noexcept { return elements_; }
  const std::vector<ElementId>& atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return elements_.size(); }
  ElementId top() const { return ring_.one(); }
  ElementId bottom() const { return ring_.zero(); }

  bool contains(ElementId e) const { return std::binary_search(elements_.begin(), elements_.end(), e); }
  bool leq(ElementId e, ElementId f) const { return ring_.mul(e, f) == e && ring_.mul(f, e) == e; }
  ElementId meet(ElementId e, ElementId f) const { return ring_.mul(e, f); }
  ElementId join(ElementId e, ElementId f) const { return ring_.sub(ring_.add(e, f), ring_.mul(e, f)); }
  /// 1 - e
  ElementId complement(ElementId e) const { return ring_.sub(ring_.one(), e); }

  bool is_nontrivial(ElementId e) const { return e != ring_.zero() && e != ring_.one(); }

  /// A chain x < y < z of three lattice elements none of which is 0.
  bool has_chain_of_three_without_zero() const {
    for (ElementId x : elements_) {
      if (x == bottom()) continue;
      for (ElementId y : elements_)
        if (y != x && leq(x, y))
          for (ElementId z : elements_)
            if (z != y && z != x && leq(y, z)) return true;
    }
    return false;
  }

 private:
  FiniteStarRing ring_;
  std::vector<ElementId> elements_;
  std::vector<ElementId> atoms_;
};

inline CentralProjectionLattice cp_lattice(const FiniteStarRing& R) { return CentralProjectionLattice(R); }

}  // namespace starring
