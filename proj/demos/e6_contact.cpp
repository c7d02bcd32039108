// Contact geometry of the E6 adjoint variety: Levi factor, contact distribution,
// the exterior square of D^vee(2) and the resulting h^0(Omega^2(k)).

#include <iostream>

#include "adjfol/adjfol.hpp"

using namespace adjfol;

int main() {
  AdjointData ad = adjoint_data('E', 6);
  const RootDatum& d = ad.md.ambient();
  std::cout << "X = " << d.name() << "/P(alpha" << ad.md.marked_node() << "), Levi " << levi_diagram(ad.md).name()
            << "\n";
  std::cout << "dim X = " << ad.dim_X << ", m = " << ad.m << ", index = " << ad.index << ", c1(D) = " << ad.c1_D
            << "\n";
  std::cout << "O_X(1) = E(" << ad.lambda0.pretty() << "), D^vee = E(" << ad.Ddual_weight.pretty() << ")\n";
  std::cout << "h^0(O_X(1)) = " << cohomology(ad.md, ad.lambda0).h(0) << " = dim " << d.name() << "\n\n";

  Decomposition dec = wedge2_Ddual_twisted(ad, 2);
  std::cout << "wedge^2 D^vee(2), rank " << dec.total_dim() << ":\n";
  for (const auto& p : dec.pieces) {
    const Weight w = dec.ambient_weight(p);
    CohomologyResult c = cohomology(ad.md, w);
    std::cout << "  E(" << w.pretty() << ")  rank " << p.dim << "  ";
    if (c.zero())
      std::cout << "acyclic\n";
    else
      std::cout << "h^" << c.degree << " = " << c.dim << "\n";
  }
  for (int k = 1; k <= 3; ++k) {
    H0Omega2 h = h0_omega2(ad, k);
    std::cout << "h^0(Omega^2(" << k << ")) = ";
    if (h.exact)
      std::cout << h.value << "\n";
    else
      std::cout << "[" << h.lower << ", " << h.upper << "]  " << h.note << "\n";
  }
}
