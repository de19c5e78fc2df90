// Builds the two-plane/line diagram from the README by hand, computes its
// †-limit under both supporting subsets, and prints the canonical weights.

#include <iomanip>
#include <iostream>

#include "daglim/daglim.hpp"

using namespace daglim;

int main() {
  Space a{"A", 2}, b{"B", 1}, c{"C", 2};

  Diagram<Cnum> d;
  d.objects = {a, b, c};
  d.arrows = {
      {"u", "A", "C", Morphism<Cnum>::from_rows(a, c, {{2, 0}, {0, 1}})},
      {"v", "C", "A", Morphism<Cnum>::from_rows(c, a, {{0.5, 0}, {0, 1}})},
      {"p", "B", "A", Morphism<Cnum>::from_rows(b, a, {{1}, {0}})},
      {"q", "B", "C", Morphism<Cnum>::from_rows(b, c, {{2}, {0}})},
  };

  for (auto omega : {std::vector<std::string>{"A", "B", "C"}, std::vector<std::string>{"B"}}) {
    auto result = dagger_limit(close_and_support(d, omega));
    std::cout << "omega = {";
    for (std::size_t i = 0; i < omega.size(); ++i) std::cout << (i ? "," : "") << omega[i];
    std::cout << "}: limit dim " << result.limit_object.dim << ", weights";
    for (const auto& [name, w] : result.weights)
      std::cout << "  " << name << "=" << std::setprecision(6) << w.v.real();
    std::cout << ", normalization residual " << std::scientific << std::setprecision(2)
              << result.normalization_residual << std::defaultfloat << "\n";
  }
  return 0;
}
