#pragma once

#include <starring/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace starring {

/// A path length, diameter or girth: finite, infinite (disconnected / acyclic) or undefined
/// (diameter of the empty graph).
class Length {
 public:
  enum class Kind { finite, infinite, undefined };

  static Length finite(std::size_t v) { return Length(Kind::finite, v); }
  static Length infinite() { return Length(Kind::infinite, 0); }
  static Length undefined() { return Length(Kind::undefined, 0); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::finite; }
  bool is_infinite() const noexcept { return kind_ == Kind::infinite; }
  bool is_undefined() const noexcept { return kind_ == Kind::undefined; }
  std::size_t value() const noexcept { return value_; }

  std::string to_string() const {
    switch (kind_) {
      case Kind::finite: return std::to_string(value_);
      case Kind::infinite: return "inf";
      case Kind::undefined: return "undefined";
    }
    return "?";
  }

  friend bool operator==(const Length&, const Length&) = default;
  friend bool operator==(const Length& l, std::size_t v) { return l.is_finite() && l.value_ == v; }

 private:
  Length(Kind k, std::size_t v) : kind_(k), value_(v) {}
  Kind kind_;
  std::size_t value_;
};

struct GraphMetrics {
  bool connected = false;
  std::size_t component_count = 0;
  Length diameter = Length::undefined();
  Length girth = Length::infinite();
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
};

/// All-pairs shortest path lengths over vertex positions; kUnreachable marks infinity.
class DistanceTable {
 public:
  static constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

  DistanceTable() = default;
  explicit DistanceTable(std::size_t v) : v_(v), d_(v * v, kUnreachable) {}

  std::uint32_t at(std::size_t i, std::size_t j) const { return d_[i * v_ + j]; }
  std::uint32_t& at(std::size_t i, std::size_t j) { return d_[i * v_ + j]; }
  std::size_t size() const noexcept { return v_; }

 private:
  std::size_t v_ = 0;
  std::vector<std::uint32_t> d_;
};

namespace detail {

// Breadth-first layers from one source using word-parallel frontier expansion.
inline void bfs_layers(const Graph& g, std::size_t source, std::uint32_t* dist) {
  const std::size_t v = g.vertex_count();
  Bitset visited(v), frontier(v);
  visited.set(source);
  frontier.set(source);
  dist[source] = 0;
  for (std::uint32_t depth = 1; frontier.any(); ++depth) {
    Bitset next(v);
    for (auto i = frontier.find_first(); i != Bitset::npos; i = frontier.find_next(i)) next |= g.row(i);
    next -= visited;
    for (auto i = next.find_first(); i != Bitset::npos; i = next.find_next(i)) dist[i] = depth;
    visited |= next;
    frontier = std::move(next);
  }
}

}  // namespace detail

inline DistanceTable distances(const Graph& g) {
  DistanceTable t(g.vertex_count());
  for (std::size_t s = 0; s < g.vertex_count(); ++s) detail::bfs_layers(g, s, &t.at(s, 0));
  return t;
}

/// Shortest-path length between two vertices.
inline Length distance(const Graph& g, ElementId a, ElementId b) {
  const std::size_t i = g.index_of(a), j = g.index_of(b);
  std::vector<std::uint32_t> dist(g.vertex_count(), DistanceTable::kUnreachable);
  detail::bfs_layers(g, i, dist.data());
  return dist[j] == DistanceTable::kUnreachable ? Length::infinite() : Length::finite(dist[j]);
}

/// Component id per vertex position; ids are assigned in order of smallest member.
inline std::vector<std::size_t> component_ids(const Graph& g, std::optional<std::size_t> removed = std::nullopt) {
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  const std::size_t v = g.vertex_count();
  std::vector<std::size_t> comp(v, kUnset);
  std::size_t next = 0;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < v; ++s) {
    if (comp[s] != kUnset || (removed && *removed == s)) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      const auto& r = g.row(u);
      for (auto w = r.find_first(); w != Bitset::npos; w = r.find_next(w))
        if (comp[w] == kUnset && !(removed && *removed == w)) {
          comp[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return comp;
}

inline std::size_t component_count(const Graph& g, std::optional<std::size_t> removed = std::nullopt) {
  std::size_t count = 0;
  const auto comp = component_ids(g, removed);
  for (std::size_t i = 0; i < comp.size(); ++i)
    if (!(removed && *removed == i)) count = std::max(count, comp[i] + 1);
  return count;
}

/// Length of the shortest cycle. Exact: breadth-first search from each vertex, pruned once
/// no shorter cycle can be found from that source.
inline Length girth(const Graph& g) {
  const std::size_t v = g.vertex_count();
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::size_t best = kInf;
  std::vector<std::size_t> dist(v), parent(v);
  std::vector<std::size_t> queue;
  queue.reserve(v);
  for (std::size_t s = 0; s < v && best > 3; ++s) {
    std::fill(dist.begin(), dist.end(), kInf);
    queue.clear();
    dist[s] = 0;
    parent[s] = s;
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      if (2 * dist[u] >= best) break;
      const auto& r = g.row(u);
      for (auto w = r.find_first(); w != Bitset::npos; w = r.find_next(w)) {
        if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best == kInf ? Length::infinite() : Length::finite(best);
}

inline bool has_triangle(const Graph& g) {
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const auto& r = g.row(i);
    for (auto j = r.find_next(i); j != Bitset::npos; j = r.find_next(j))
      if ((r & g.row(j)).any()) return true;
  }
  return false;
}

inline Length diameter_from(const DistanceTable& t) {
  if (t.size() == 0) return Length::undefined();
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (t.at(i, j) == DistanceTable::kUnreachable) return Length::infinite();
      d = std::max(d, t.at(i, j));
    }
  return Length::finite(d);
}

inline GraphMetrics metrics(const Graph& g, const DistanceTable& t) {
  GraphMetrics m;
  m.vertex_count = g.vertex_count();
  m.edge_count = g.edge_count();
  m.component_count = component_count(g);
  m.connected = m.component_count == 1;
  m.diameter = diameter_from(t);
  m.girth = girth(g);
  return m;
}

inline GraphMetrics metrics(const Graph& g) { return metrics(g, distances(g)); }

/// Articulation points: vertices whose removal strictly increases the number of components.
inline ElementSet cut_vertices(const Graph& g) {
  const std::size_t v = g.vertex_count();
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> disc(v, kUnset), low(v, 0), parent(v, kUnset), child_count(v, 0);
  std::vector<Bitset::size_type> cursor(v);
  std::vector<bool> cut(v, false);
  std::size_t timer = 0;
  std::vector<std::size_t> stack;

  for (std::size_t root = 0; root < v; ++root) {
    if (disc[root] != kUnset) continue;
    disc[root] = low[root] = timer++;
    cursor[root] = g.row(root).find_first();
    stack.push_back(root);
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      const auto w = cursor[u];
      if (w != Bitset::npos) {
        cursor[u] = g.row(u).find_next(w);
        if (disc[w] == kUnset) {
          parent[w] = u;
          ++child_count[u];
          disc[w] = low[w] = timer++;
          cursor[w] = g.row(w).find_first();
          stack.push_back(w);
        } else if (w != parent[u]) {
          low[u] = std::min(low[u], disc[w]);
        }
        continue;
      }
      stack.pop_back();
      if (parent[u] != kUnset) {
        const std::size_t p = parent[u];
        low[p] = std::min(low[p], low[u]);
        if (parent[p] != kUnset && low[u] >= disc[p]) cut[p] = true;
      }
    }
    if (child_count[root] >= 2) cut[root] = true;
  }

  ElementSet out(g.ring_order());
  for (std::size_t i = 0; i < v; ++i)
    if (cut[i]) out.insert(g.vertex(i));
  return out;
}

/// Vertices of degree exactly one.
inline ElementSet pendant_vertices(const Graph& g) {
  ElementSet out(g.ring_order());
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    if (g.degree_at(i) == 1) out.insert(g.vertex(i));
  return out;
}

struct BipartiteParts {
  std::size_t larger = 0;
  std::size_t smaller = 0;
  /// The two colour classes as vertex lists, larger first.
  std::vector<ElementId> first, second;
};

/// Part sizes (m, n) with m >= n >= 1 when the graph is complete bipartite.
inline std::optional<BipartiteParts> is_complete_bipartite(const Graph& g) {
  const std::size_t v = g.vertex_count();
  if (v < 2) return std::nullopt;
  std::vector<int> colour(v, -1);
  std::vector<std::size_t> stack{0};
  colour[0] = 0;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    const auto& r = g.row(u);
    for (auto w = r.find_first(); w != Bitset::npos; w = r.find_next(w)) {
      if (colour[w] == -1) {
        colour[w] = 1 - colour[u];
        stack.push_back(w);
      } else if (colour[w] == colour[u]) {
        return std::nullopt;
      }
    }
  }
  BipartiteParts parts;
  for (std::size_t i = 0; i < v; ++i) {
    if (colour[i] == -1) return std::nullopt;
    (colour[i] == 0 ? parts.first : parts.second).push_back(g.vertex(i));
  }
  if (parts.second.empty() || g.edge_count() != parts.first.size() * parts.second.size()) return std::nullopt;
  if (parts.first.size() < parts.second.size()) std::swap(parts.first, parts.second);
  parts.larger = parts.first.size();
  parts.smaller = parts.second.size();
  return parts;
}

/// Any two distinct members of S are adjacent; vacuously true for |S| <= 1.
inline bool is_clique(const Graph& g, std::span<const ElementId> s) {
  std::vector<std::size_t> idx;
  for (ElementId a : s) idx.push_back(g.index_of(a));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      if (idx[i] != idx[j] && !g.adjacent_at(idx[i], idx[j])) return false;
  return true;
}

inline bool is_clique(const Graph& g, const ElementSet& s) { return is_clique(g, s.to_vector()); }

/// a and b are adjacent and share no neighbour.
inline bool orthogonal(const Graph& g, ElementId a, ElementId b) {
  const std::size_t i = g.index_of(a), j = g.index_of(b);
  if (i == j) throw InvalidArgument("orthogonality needs two distinct vertices");
  return g.adjacent_at(i, j) && !g.row(i).intersects(g.row(j));
}

/// Every vertex has an orthogonal partner.
inline bool is_complemented(const Graph& g) {
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const auto& r = g.row(i);
    bool found = false;
    for (auto j = r.find_first(); j != Bitset::npos && !found; j = r.find_next(j)) found = !r.intersects(g.row(j));
    if (!found) return false;
  }
  return true;
}

struct Split {
  std::vector<ElementId> x;  ///< includes the cut vertex
  std::vector<ElementId> y;  ///< includes the cut vertex
};

/// Largest number of components of G - a for which splits are enumerated (2^12 bipartitions).
inline constexpr std::size_t kMaxSplitComponents = 13;

/// Components of G - a as sorted vertex lists, ordered by smallest member.
inline std::vector<std::vector<ElementId>> components_without(const Graph& g, ElementId a) {
  const std::size_t ia = g.index_of(a);
  const auto comp = component_ids(g, ia);
  std::vector<std::vector<ElementId>> groups;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (i == ia) continue;
    if (comp[i] >= groups.size()) groups.resize(comp[i] + 1);
    groups[comp[i]].push_back(g.vertex(i));
  }
  return groups;
}

/// Every way of splitting G into X and Y meeting only at the cut vertex a, with no edges
/// between X - a and Y - a. Each unordered split appears once; the component holding the
/// smallest vertex of G - a is always on the Y side. Empty when a is not a cut vertex.
inline std::vector<Split> splits_via(const Graph& g, ElementId a) {
  const auto groups = components_without(g, a);
  if (groups.size() < 2) return {};
  if (groups.size() > kMaxSplitComponents) throw SplitCapExceeded(groups.size(), kMaxSplitComponents);
  std::vector<Split> out;
  const std::size_t free = groups.size() - 1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << free); ++mask) {
    Split s{{a}, {a}};
    for (std::size_t c = 0; c < groups.size(); ++c) {
      const bool in_x = c > 0 && ((mask >> (c - 1)) & 1u);
      auto& side = in_x ? s.x : s.y;
      side.insert(side.end(), groups[c].begin(), groups[c].end());
    }
    std::sort(s.x.begin(), s.x.end());
    std::sort(s.y.begin(), s.y.end());
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace starring
