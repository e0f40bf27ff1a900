// Subalgebra of the G2 hyperalgebra generated by e1^(2^s), e2^(2^s), s < r,
// at p = 2: its dimension, the root vectors it contains, and how many of the
// bounded monomials it misses.
#include <cstdlib>
#include <iostream>

#include "hyperalg/generators.hpp"

using namespace hyperalg;

int main(int argc, char** argv) {
  const int r = argc > 1 ? std::atoi(argv[1]) : 1;
  if (r < 1 || r > 4) {
    std::cerr << "usage: g2_subalgebra [r in 1..4]\n";
    return 2;
  }
  auto layout = make_layout('G', 2, Mode::kPlus);
  Algebra<PrimeField> alg(layout, PrimeField(2));
  const AmbientBox box(layout, 2, r);
  const auto res = span_closure(alg, lambda_plus(alg, r), box);

  std::cout << "box dimension " << box.dimension() << ", closure dimension " << res.dimension() << "\n";
  const RootSystem& rs = layout->roots();
  const int n = ipow(2, r - 1);
  for (int k = 0; k < rs.num_positive(); ++k) {
    const int id = layout->order().root_at(k);
    std::cout << "  " << root_power_label(rs, id, n) << (res.space->contains(alg.root_vector(id, n)) ? "  in" : "  out")
              << "\n";
  }
  return 0;
}
