#pragma once

#include <starring/annihilators.hpp>
#include <starring/classify.hpp>
#include <starring/graph.hpp>
#include <starring/graph_algorithms.hpp>
#include <starring/projections.hpp>
#include <starring/ring.hpp>

#include <vector>

namespace starring {

/// Everything derived from one ring that the verification checks consume: annihilators,
/// classification, central projections and covers, the strong graph and its complement.
/// Built once, read-only afterwards.
class RingAnalysis {
 public:
  explicit RingAnalysis(FiniteStarRing R)
      : ring_(std::move(R)),
        table_(ring_),
        classification_(classify(table_)),
        lattice_(ring_),
        covers_(ring_, lattice_.elements()),
        strong_(build_graph(table_, GraphKind::strong)),
        strong_distances_(distances(strong_)),
        strong_metrics_(metrics(strong_, strong_distances_)),
        complement_(starring::complement(strong_)),
        complement_distances_(distances(complement_)),
        complement_metrics_(metrics(complement_, complement_distances_)),
        cut_vertices_(starring::cut_vertices(strong_)),
        pendants_(pendant_vertices(strong_)) {
    cover_class_size_.assign(ring_.order(), 0);
    for (ElementId a = 0; a < ring_.order(); ++a) ++cover_class_size_[covers_(a)];
  }

  const FiniteStarRing& ring() const noexcept { return ring_; }
  const AnnihilatorTable& annihilators() const noexcept { return table_; }
  const ClassificationReport& classification() const noexcept { return classification_; }
  const CentralProjectionLattice& lattice() const noexcept { return lattice_; }
  const CentralCoverMap& covers() const noexcept { return covers_; }
  ElementId cover(ElementId a) const { return covers_(a); }
  /// |C_e| = number of elements whose central cover is e.
  std::size_t cover_class_size(ElementId e) const { return cover_class_size_.at(e); }

  const Graph& strong() const noexcept { return strong_; }
  const DistanceTable& strong_distances() const noexcept { return strong_distances_; }
  const GraphMetrics& strong_metrics() const noexcept { return strong_metrics_; }
  const Graph& complement() const noexcept { return complement_; }
  const DistanceTable& complement_distances() const noexcept { return complement_distances_; }
  const GraphMetrics& complement_metrics() const noexcept { return complement_metrics_; }
  const ElementSet& cut_vertices() const noexcept { return cut_vertices_; }
  const ElementSet& pendants() const noexcept { return pendants_; }

  /// Strong-graph distance between two vertices, DistanceTable::kUnreachable when disconnected.
  std::uint32_t distance(ElementId a, ElementId b) const {
    return strong_distances_.at(strong_.index_of(a), strong_.index_of(b));
  }

 private:
  FiniteStarRing ring_;
  AnnihilatorTable table_;
  ClassificationReport classification_;
  CentralProjectionLattice lattice_;
  CentralCoverMap covers_;
  Graph strong_;
  DistanceTable strong_distances_;
  GraphMetrics strong_metrics_;
  Graph complement_;
  DistanceTable complement_distances_;
  GraphMetrics complement_metrics_;
  ElementSet cut_vertices_;
  ElementSet pendants_;
  std::vector<std::size_t> cover_class_size_;
};

}  // namespace starring
