// The foliation of the hyperplane section X of P^2 x P^2 spanned by the action
// of the two-dimensional nonabelian Lie algebra, with its invariant surfaces.

#include <iostream>

#include "adjfol/adjfol.hpp"

using namespace adjfol;

int main() {
  AffPair pair = aff_pair();
  std::cout << "generators satisfy " << pair.relation << ": " << (aff_relation_holds(pair) ? "yes" : "no") << "\n";
  FieldFoliation f = foliation_from_fields(pair.first, pair.second);
  const auto names = fol_names(2);
  std::cout << "omega has bidegree " << f.bidegree.str() << "\n";
  for (int v = 0; v < fol_nvars(2); ++v) {
    Poly c = f.omega.coeff1(v);
    if (!c.is_zero()) std::cout << "  d" << names[static_cast<std::size_t>(v)] << ": " << c.to_string(names) << "\n";
  }
  std::cout << "integrable: " << (integrable(f.omega) ? "yes" : "no") << "\n";
  std::cout << "saturated:  " << (has_divisorial_singularities(f.omega) ? "no" : "yes") << "\n";
  for (const Poly& s : {aff_surface_h1(), aff_surface_h2()})
    std::cout << "surface " << s.to_string(names) << " = 0, class " << bidegree(s, 2)->str()
              << ", invariant: " << (is_invariant(f.omega, s) ? "yes" : "no") << "\n";
  for (int family : {1, 2}) {
    auto ds = sample_degrees(f.omega, family, 5, 1, 100);
    std::cout << "degree along lines of family " << family << ":";
    for (const auto& d : ds) std::cout << " " << d.str();
    std::cout << "\n";
  }
}
