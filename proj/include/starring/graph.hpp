#pragma once

#include <starring/annihilators.hpp>
#include <starring/element_set.hpp>
#include <starring/error.hpp>
#include <starring/ring.hpp>

#include <string>
#include <utility>
#include <vector>

namespace starring {

enum class GraphKind {
  strong,          ///< a ~ b iff aRb* = 0, vertices a != 0 with r_R(aR) != 0
  star_zdg,        ///< a ~ b iff ab* = 0, vertices the nonzero left zero-divisors
  undirected_zdg,  ///< a ~ b iff ab = 0 or ba = 0, vertices the nonzero zero-divisors
};

inline const char* to_string(GraphKind k) {
  switch (k) {
    case GraphKind::strong: return "strong";
    case GraphKind::star_zdg: return "star";
    case GraphKind::undirected_zdg: return "undirected";
  }
  return "?";
}

/// Simple undirected graph on ring elements. Vertices are kept in ascending ElementId order and
/// addressed internally by their position; adjacency rows are bitsets over positions.
class Graph {
 public:
  Graph(GraphKind kind, bool complemented, std::size_t ring_order, std::vector<ElementId> vertices)
      : kind_(kind), complemented_(complemented), vertices_(std::move(vertices)), index_(ring_order, kNone) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) index_[vertices_[i]] = static_cast<std::uint32_t>(i);
    adj_.assign(vertices_.size(), Bitset(vertices_.size()));
  }

  GraphKind kind() const noexcept { return kind_; }
  bool is_complement() const noexcept { return complemented_; }
  std::size_t ring_order() const noexcept { return index_.size(); }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const std::vector<ElementId>& vertices() const noexcept { return vertices_; }
  ElementId vertex(std::size_t i) const { return vertices_[i]; }

  bool has_vertex(ElementId a) const { return a < index_.size() && index_[a] != kNone; }
  std::size_t index_of(ElementId a) const {
    if (!has_vertex(a)) throw UnknownVertex("element id " + std::to_string(a) + " is not a vertex");
    return index_[a];
  }

  /// Adjacency row of the vertex at position i, over positions.
  const Bitset& row(std::size_t i) const { return adj_[i]; }
  std::size_t degree_at(std::size_t i) const { return adj_[i].count(); }
  bool adjacent_at(std::size_t i, std::size_t j) const { return adj_[i].test(j); }

  bool adjacent(ElementId a, ElementId b) const { return adj_[index_of(a)].test(index_of(b)); }
  std::size_t degree(ElementId a) const { return adj_[index_of(a)].count(); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& r : adj_) twice += r.count();
    return twice / 2;
  }

  /// Edges (u, v) with u < v by ElementId, in lexicographic order.
  std::vector<std::pair<ElementId, ElementId>> edges() const {
    std::vector<std::pair<ElementId, ElementId>> out;
    for (std::size_t i = 0; i < adj_.size(); ++i)
      for (auto j = adj_[i].find_next(i); j != Bitset::npos; j = adj_[i].find_next(j))
        out.emplace_back(vertices_[i], vertices_[j]);
    return out;
  }

  /// Neighbourhood of a vertex as a set of ring elements.
  ElementSet neighbours(ElementId a) const {
    ElementSet out(ring_order());
    const auto& r = adj_[index_of(a)];
    for (auto j = r.find_first(); j != Bitset::npos; j = r.find_next(j)) out.insert(vertices_[j]);
    return out;
  }

  void connect_at(std::size_t i, std::size_t j) {
    if (i == j) return;
    adj_[i].set(j);
    adj_[j].set(i);
  }

 private:
  static constexpr std::uint32_t kNone = 0xffffffffu;

  GraphKind kind_;
  bool complemented_;
  std::vector<ElementId> vertices_;
  std::vector<std::uint32_t> index_;
  std::vector<Bitset> adj_;
};

/// Strong zero-divisor graph or one of the comparison graphs.
/// The strong adjacency tests b* in r_R(aR) or a* in r_R(bR); for proper involutions the two
/// coincide, for pseudo-involutions the disjunction makes the relation symmetric.
inline Graph build_graph(const AnnihilatorTable& table, GraphKind kind) {
  const FiniteStarRing& R = table.ring();
  const auto n = static_cast<ElementId>(R.order());
  std::vector<ElementId> vertices;

  switch (kind) {
    case GraphKind::strong:
      for (ElementId a = 1; a < n; ++a)
        if (table.ann_principal(a).size() > 1) vertices.push_back(a);
      break;
    case GraphKind::star_zdg:
      for (ElementId a = 1; a < n; ++a)
        if (table.ann_elem(a).size() > 1) vertices.push_back(a);
      break;
    case GraphKind::undirected_zdg:
      for (ElementId a = 1; a < n; ++a) {
        bool zd = table.ann_elem(a).size() > 1;
        for (ElementId b = 1; !zd && b < n; ++b) zd = R.mul(b, a) == R.zero();
        if (zd) vertices.push_back(a);
      }
      break;
  }

  Graph g(kind, false, R.order(), vertices);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      const ElementId a = vertices[i], b = vertices[j];
      bool edge = false;
      switch (kind) {
        case GraphKind::strong:
          edge = table.ann_principal(a).contains(R.star(b)) || table.ann_principal(b).contains(R.star(a));
          break;
        case GraphKind::star_zdg:
          edge = R.mul(a, R.star(b)) == R.zero() || R.mul(b, R.star(a)) == R.zero();
          break;
        case GraphKind::undirected_zdg:
          edge = R.mul(a, b) == R.zero() || R.mul(b, a) == R.zero();
          break;
      }
      if (edge) g.connect_at(i, j);
    }
  return g;
}

inline Graph build_graph(const FiniteStarRing& R, GraphKind kind) { return build_graph(AnnihilatorTable(R), kind); }

/// Same vertex set; every pair of distinct vertices flips adjacency.
inline Graph complement(const Graph& g) {
  Graph c(g.kind(), !g.is_complement(), g.ring_order(), g.vertices());
  const std::size_t v = g.vertex_count();
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = i + 1; j < v; ++j)
      if (!g.adjacent_at(i, j)) c.connect_at(i, j);
  return c;
}

}  // namespace starring
