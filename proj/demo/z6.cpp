// Strong graph of Z6, its complement, and the theorem checks that apply.
#include <starring/ring_spec.hpp>
#include <starring/theorems.hpp>

#include <iostream>

int main() {
  using namespace starring;
  RingAnalysis A(make_zmod(6));
  const auto& R = A.ring();

  std::cout << "strong edges:";
  for (auto [u, v] : A.strong().edges()) std::cout << " " << R.label(u) << "-" << R.label(v);
  std::cout << "\ncomplement edges:";
  for (auto [u, v] : A.complement().edges()) std::cout << " " << R.label(u) << "-" << R.label(v);
  std::cout << "\n";

  for (const auto& r : run_all(A)) {
    if (r.status == CheckStatus::hypothesis_not_met) continue;
    std::cout << code(r.id) << ": " << to_string(r.status) << (r.vacuous ? " (vacuous)" : "") << "\n";
  }
}
