// Punctual length-4 schemes from ideals: which carry a compatible
// symplectic form on their matrix model.

#include <iostream>
#include <string>
#include <vector>

#include "abelmod/abelmod.hpp"

int main() {
  using namespace abelmod;
  const std::vector<std::vector<std::string>> ideals{
      {"x^4", "y"},
      {"x^2", "y^2"},
      {"x^3", "x^2y", "xy^2", "y^3", "y^2 - xy", "x^2 - xy"},
      {"x^2", "xy", "y^3"},
  };
  for (const auto& gens : ideals) {
    auto q = quotient_by_ideal([&] {
      std::vector<Poly2> polys;
      for (const auto& g : gens) polys.push_back(parse_poly2(g));
      return polys;
    }(), 4);
    auto sym = symplectic_exists(q.pair);
    std::string label;
    for (const auto& g : gens) label += (label.empty() ? "(" : ", ") + g;
    std::cout << label << ")  dim " << q.pair.dim() << "  cyclic dual: " << (is_cyclic(dual(q.pair)) ? "yes" : "no")
              << "  symplectic: " << (sym.contains_invertible ? "yes" : "no") << " [" << to_string(sym.method)
              << "]\n";
  }
}
