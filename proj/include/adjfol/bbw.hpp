#pragma once

// Bott-Borel-Weil cohomology of irreducible homogeneous bundles on G/P(alpha)
// and of finite direct sums of them.

#include <map>
#include <string>

#include "adjfol/parabolic.hpp"
#include "adjfol/repcalc.hpp"
#include "adjfol/weylgroup.hpp"

namespace adjfol {

struct CohomologyResult {
  enum class Kind { AllZero, Concentrated };
  Kind kind = Kind::AllZero;
  int degree = 0;
  Weight top_weight;
  BigInt dim = 0;

  bool zero() const { return kind == Kind::AllZero; }
  /// h^i as a number.
  BigInt h(int i) const { return kind == Kind::Concentrated && i == degree ? dim : BigInt(0); }
};

/// H^*(G/P, E_lambda): zero when lambda + delta is singular, otherwise V_mu in the index degree.
inline CohomologyResult cohomology(const MarkedDatum& md, const Weight& lambda) {
  if (!is_bundle_weight(md, lambda))
    throw InvalidArgument("not a bundle weight for marked node " + std::to_string(md.marked_node()) + ": " +
                          lambda.pretty());
  DotResult r = dot_classify(md.ambient(), lambda);
  CohomologyResult out;
  if (r.singular()) return out;
  out.kind = CohomologyResult::Kind::Concentrated;
  out.degree = r.index_p;
  out.top_weight = r.dominant_weight;
  out.dim = weyl_dim(md.ambient(), r.dominant_weight);
  return out;
}

/// Euler characteristic of E_lambda from its cohomology.
inline BigInt euler_characteristic(const CohomologyResult& c) {
  if (c.zero()) return 0;
  return c.degree % 2 == 0 ? c.dim : BigInt(-c.dim);
}

struct CohomologyTable {
  std::map<int, BigInt> h;  // degree -> dimension, zero entries omitted

  BigInt at(int i) const {
    auto it = h.find(i);
    return it == h.end() ? BigInt(0) : it->second;
  }
  void add(int i, const BigInt& v) {
    if (v == 0) return;
    h[i] += v;
  }
  bool all_zero() const { return h.empty(); }
};

/// Cohomology of a direct sum; each piece is read as E_{weight + twist * contact_weight}.
inline CohomologyTable cohomology_of_decomposition(const MarkedDatum& md, const Decomposition& dec,
                                                   const Weight& contact_weight) {
  CohomologyTable t;
  for (const auto& p : dec.pieces) {
    CohomologyResult c = cohomology(md, p.weight + p.twist * contact_weight);
    if (!c.zero()) t.add(c.degree, c.dim * p.mult);
  }
  return t;
}

}  // namespace adjfol
