#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace starring {

/// Dense index of a ring element. Id 0 is always the additive identity.
using ElementId = std::uint32_t;

using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// A subset of the elements of one fixed ring, stored as a bitset over ElementId.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_(universe) {}
  ElementSet(std::size_t universe, std::initializer_list<ElementId> members) : bits_(universe) {
    for (ElementId m : members) bits_.set(m);
  }
  explicit ElementSet(Bitset bits) : bits_(std::move(bits)) {}

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    s.bits_.set();
    return s;
  }

  template <class Range>
  static ElementSet from(std::size_t universe, const Range& members) {
    ElementSet s(universe);
    for (auto m : members) s.insert(static_cast<ElementId>(m));
    return s;
  }

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }

  bool contains(ElementId x) const { return x < bits_.size() && bits_.test(x); }
  void insert(ElementId x) { bits_.set(x); }
  void erase(ElementId x) { bits_.reset(x); }

  bool is_subset_of(const ElementSet& other) const { return bits_.is_subset_of(other.bits_); }

  ElementSet& operator&=(const ElementSet& o) {
    bits_ &= o.bits_;
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) {
    bits_ |= o.bits_;
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.bits_ == b.bits_; }
  friend bool operator<(const ElementSet& a, const ElementSet& b) { return a.bits_ < b.bits_; }

  template <class F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != Bitset::npos; i = bits_.find_next(i))
      f(static_cast<ElementId>(i));
  }

  std::vector<ElementId> to_vector() const {
    std::vector<ElementId> out;
    out.reserve(size());
    for_each([&](ElementId x) { out.push_back(x); });
    return out;
  }

  const Bitset& bits() const noexcept { return bits_; }

 private:
  Bitset bits_;
};

}  // namespace starring
