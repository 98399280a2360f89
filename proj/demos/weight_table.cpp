// Highest-coroot weights of every simple type and the weighted projective
// space they define, next to the crepant-resolution verdict.

#include <iostream>

#include "abelmod/reports.hpp"

int main() {
  using namespace abelmod;
  for (const auto& row : weight_table_rows(4)) {
    auto rd = build_root_datum(row.type);
    auto g = highest_coroot_coefficients(rd);
    std::cout << row.group << "\t" << row.type.label() << "\t|W| = " << rd.weyl_order() << "\t"
              << weighted_projective_space(g) << "\t" << to_string(crepant_classification(row.type)) << "\n";
  }
}
