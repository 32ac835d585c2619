#pragma once

#include <starring/ring_spec.hpp>
#include <starring/theorems.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace starring {

struct CorpusSpec {
  unsigned zmod_min = 2;
  unsigned zmod_max = 100;
  std::size_t product_order_max = 256;
  std::vector<unsigned> factors = {2, 3, 4, 5, 6, 8, 9};
  unsigned matrix_size = 2;
  std::vector<unsigned> matrix_moduli = {2, 3, 4, 6};
  std::vector<Involution> matrix_involutions = {Involution::identity, Involution::transpose};
  /// Largest ring order allowed; enumerating a larger ring is an OrderLimitError.
  std::size_t order_cap = RingLimits::from_environment().max_order;
};

inline std::size_t spec_order(const RingSpec& s) {
  switch (s.kind) {
    case RingKind::zmod: return s.n;
    case RingKind::product: return spec_order(s.children[0]) * spec_order(s.children[1]);
    case RingKind::matrix: {
      std::size_t out = 1;
      const std::size_t b = spec_order(s.children[0]);
      for (unsigned i = 0; i < s.n * s.n; ++i) out *= b;
      return out;
    }
  }
  return 0;
}

/// Rings of the corpus in canonical order: ascending order, then Z_n before products before
/// matrix rings, then descriptor. Duplicate descriptors are dropped.
inline std::vector<RingSpec> enumerate(const CorpusSpec& c) {
  std::vector<RingSpec> out;
  std::set<std::string> seen;
  auto add = [&](RingSpec s) {
    if (spec_order(s) > c.order_cap) throw OrderLimitError(spec_order(s), c.order_cap);
    if (seen.insert(s.to_string()).second) out.push_back(std::move(s));
  };

  for (unsigned n = c.zmod_min; n <= c.zmod_max; ++n) add(RingSpec::zmod(n));

  std::vector<unsigned> pool = c.factors;
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  // Non-decreasing factor sequences of length >= 2, nested to the right.
  std::vector<unsigned> seq;
  std::function<void(std::size_t, std::size_t)> grow = [&](std::size_t from, std::size_t order) {
    if (seq.size() >= 2) {
      RingSpec s = RingSpec::zmod(seq.back());
      for (std::size_t i = seq.size() - 1; i-- > 0;) s = RingSpec::product(RingSpec::zmod(seq[i]), std::move(s));
      add(std::move(s));
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      if (pool[i] < 2 || order * pool[i] > c.product_order_max) continue;
      seq.push_back(pool[i]);
      grow(i, order * pool[i]);
      seq.pop_back();
    }
  };
  grow(0, 1);

  for (unsigned n : c.matrix_moduli)
    for (Involution inv : c.matrix_involutions) add(RingSpec::matrix(c.matrix_size, RingSpec::zmod(n), inv));

  auto rank = [](const RingSpec& s) { return static_cast<int>(s.kind); };
  std::stable_sort(out.begin(), out.end(), [&](const RingSpec& a, const RingSpec& b) {
    return std::make_tuple(spec_order(a), rank(a), a.to_string()) < std::make_tuple(spec_order(b), rank(b), b.to_string());
  });
  return out;
}

struct TheoremTally {
  std::size_t holds = 0;  ///< non-vacuous holds
  std::size_t vacuous = 0;
  std::size_t gated = 0;
  std::size_t violated = 0;
};

struct RingOutcome {
  std::string spec;
  std::size_t order = 0;
  std::vector<CheckResult> results;
};

struct CorpusSummary {
  std::vector<RingOutcome> rings;
  std::array<TheoremTally, kTheorems.size()> tallies{};

  std::size_t violated() const {
    std::size_t n = 0;
    for (const auto& t : tallies) n += t.violated;
    return n;
  }
  bool ok() const { return violated() == 0; }

  /// Aggregate table followed by one line per violation. Contains no timings, so it is
  /// byte-identical across runs of the same corpus.
  std::string table() const {
    std::ostringstream os;
    os << "rings " << rings.size() << "\n";
    char line[160];
    std::snprintf(line, sizeof line, "%-22s %8s %8s %8s %8s\n", "theorem", "holds", "vacuous", "gated", "violated");
    os << line;
    for (const auto& t : kTheorems) {
      const auto& c = tallies[static_cast<std::size_t>(t.id)];
      std::snprintf(line, sizeof line, "%-22s %8zu %8zu %8zu %8zu\n", std::string(t.code).c_str(), c.holds, c.vacuous,
                    c.gated, c.violated);
      os << line;
    }
    for (const auto& r : rings)
      for (const auto& c : r.results)
        if (c.status == CheckStatus::violated)
          os << "VIOLATED " << code(c.id) << " on " << r.spec << ": " << (c.witness ? c.witness->note : "") << "\n";
    return os.str();
  }
};

/// Called from worker threads once per ring; must be thread-safe.
using RingVisitor = std::function<void(const RingSpec&, const RingAnalysis&)>;

/// Verifies every theorem on every ring of the corpus using up to `jobs` threads.
/// Outcomes are stored in canonical order regardless of scheduling.
inline CorpusSummary run_corpus(const CorpusSpec& c, unsigned jobs = 1, const RingVisitor& visit = {}) {
  const auto specs = enumerate(c);
  CorpusSummary summary;
  summary.rings.resize(specs.size());
  const RingLimits limits{c.order_cap};

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < specs.size();) {
      try {
        RingAnalysis a(build_ring(specs[i], limits));
        summary.rings[i] = RingOutcome{specs[i].to_string(), a.ring().order(), run_all(a)};
        if (visit) visit(specs[i], a);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = specs.size();
      }
    }
  };
  jobs = std::max(1u, jobs);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  for (const auto& r : summary.rings)
    for (const auto& res : r.results) {
      auto& t = summary.tallies[static_cast<std::size_t>(res.id)];
      switch (res.status) {
        case CheckStatus::holds: ++(res.vacuous ? t.vacuous : t.holds); break;
        case CheckStatus::hypothesis_not_met: ++t.gated; break;
        case CheckStatus::violated: ++t.violated; break;
      }
    }
  return summary;
}

/// Ids whose converse has a finder.
inline bool has_converse(TheoremId id) {
  return id == TheoremId::side_ideal || id == TheoremId::nonzd_sum || id == TheoremId::cut_propmax ||
         id == TheoremId::cut_atom;
}

/// Counterexample to the converse of `id` inside one ring, if any.
///   side_ideal:  a split via a whose side X gives an ideal V(X) u {0} while X is not a clique
///   nonzd_sum:   x + y stays in V u {0} for all x, y outside it, yet there is no cut vertex
///   cut_propmax: r(aR) properly maximal for some a that is not a cut vertex
///   cut_atom:    an atom of L(CP(R)) that is not a cut vertex (p.q.-Baer, |CP| >= 4)
inline std::optional<Witness> converse_counterexample(TheoremId id, const RingAnalysis& A) {
  const FiniteStarRing& R = A.ring();
  const Graph& G = A.strong();
  if (G.vertex_count() == 0) return std::nullopt;
  switch (id) {
    case TheoremId::side_ideal:
      for (ElementId a : A.cut_vertices().to_vector())
        for (const auto& split : splits_via(G, a))
          for (const auto* side : {&split.x, &split.y}) {
            ElementSet ideal = ElementSet::from(R.order(), *side);
            ideal.insert(R.zero());
            if (is_ideal(R, ideal) && !is_clique(G, *side))
              return Witness{"V(X) u {0} is an ideal but X is not complete; split via " + R.label(a), *side};
          }
      return std::nullopt;
    case TheoremId::nonzd_sum: {
      if (!A.cut_vertices().empty()) return std::nullopt;
      ElementSet inside = ElementSet::from(R.order(), G.vertices());
      inside.insert(R.zero());
      for (ElementId x = 0; x < R.order(); ++x)
        for (ElementId y = x; y < R.order(); ++y)
          if (!inside.contains(x) && !inside.contains(y) && !inside.contains(R.add(x, y))) return std::nullopt;
      return Witness{"sum closure holds but there is no cut vertex; vertices listed", G.vertices()};
    }
    case TheoremId::cut_propmax:
      for (ElementId a = 1; a < R.order(); ++a)
        if (!A.cut_vertices().contains(a) && is_properly_maximal(A.annihilators(), a))
          return Witness{"r(aR) is properly maximal but a is not a cut vertex", {a}};
      return std::nullopt;
    case TheoremId::cut_atom:
      if (!A.classification().is_pq_baer || A.lattice().size() < 4) return std::nullopt;
      for (ElementId e : A.lattice().atoms())
        if (!A.cut_vertices().contains(e)) return Witness{"atom of L(CP(R)) that is not a cut vertex", {e}};
      return std::nullopt;
    default: throw InvalidArgument("no converse finder for " + std::string(code(id)));
  }
}

struct ConverseWitness {
  std::string spec;
  Witness witness;
};

/// First ring in canonical order where the converse of `id` fails.
inline std::optional<ConverseWitness> find_converse_counterexample(TheoremId id, const CorpusSpec& c) {
  if (!has_converse(id)) throw InvalidArgument("no converse finder for " + std::string(code(id)));
  const RingLimits limits{c.order_cap};
  for (const auto& s : enumerate(c)) {
    RingAnalysis a(build_ring(s, limits));
    if (auto w = converse_counterexample(id, a)) return ConverseWitness{s.to_string(), std::move(*w)};
  }
  return std::nullopt;
}

}  // namespace starring
