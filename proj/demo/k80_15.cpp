// M2(Z6) with the identity map as star: the strong graph is K_{80,15}.
#include <starring/ring_spec.hpp>
#include <starring/theorems.hpp>

#include <iostream>

int main() {
  using namespace starring;
  RingAnalysis A(build_ring("M2(Z6)@id"));
  const auto& R = A.ring();

  std::cout << "involution proper: " << std::boolalpha << R.involution_proper() << "\n";
  std::cout << "p.q.-Baer: " << A.classification().is_pq_baer << "\n";
  std::cout << "central projections:";
  for (ElementId e : A.lattice().elements()) std::cout << " " << R.label(e);
  std::cout << "\n";

  if (auto parts = is_complete_bipartite(A.strong()))
    std::cout << "complete bipartite (" << parts->larger << "," << parts->smaller << ")\n";
  std::cout << "girth " << A.strong_metrics().girth.to_string() << ", diameter "
            << A.strong_metrics().diameter.to_string() << "\n";
}
