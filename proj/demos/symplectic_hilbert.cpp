// Stringy Hodge diamonds of (A (x) Z^n)/(signed permutations) beside the
// Hilbert scheme of n points on the Kummer K3 surface.

#include <iostream>

#include "abelmod/abelmod.hpp"

int main() {
  using namespace abelmod;
  for (int n = 1; n <= 3; ++n) {
    auto engine = stringy_hodge(hyperoctahedral_action(static_cast<std::size_t>(n)));
    auto hilb = goettsche(hodge_kummer_k3(), n);
    std::cout << "n = " << n << (engine == hilb ? "  (equal to Hilb^n of K3)" : "  (DIFFERENT)") << "\n"
              << diamond_text(engine) << "euler " << euler_number(engine) << ", signature " << signature(engine)
              << "\n\n";
  }
}
