#pragma once

// Finite-dimensional representations: Weyl dimension, Freudenthal multiplicities,
// weight systems, and decomposition of exterior/symmetric squares by stripping
// highest weights. Everything runs over a RootSubsystem so that representations of
// a Levi factor keep their ambient (center) coordinate for free.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "adjfol/parabolic.hpp"
#include "adjfol/rational.hpp"
#include "adjfol/rootsystem.hpp"
#include "adjfol/weylgroup.hpp"

namespace adjfol {

inline constexpr std::int64_t kDefaultDimCeiling = 5000;

struct WeightSystem {
  std::map<Weight, std::int64_t> entries;
  std::int64_t total_dim = 0;

  std::int64_t mult(const Weight& w) const {
    auto it = entries.find(w);
    return it == entries.end() ? 0 : it->second;
  }
};

/// Signed Weyl-formula value prod <lambda+delta, a^vee>/<delta, a^vee> over the
/// subsystem's positive roots. For dominant lambda this is the dimension.
inline Rational weyl_character_value(const RootSubsystem& s, const Weight& lambda) {
  const auto& d = s.ambient();
  Rational value = 1;
  for (std::size_t k : s.roots()) {
    const auto& co = d.coroot(k);
    long num = 0, den = 0;
    for (int j = 0; j < d.rank(); ++j) {
      if (!s.kept(static_cast<std::size_t>(j))) continue;
      num += static_cast<long>(co[j]) * (lambda[j] + 1);
      den += co[j];
    }
    value *= Rational(num, den);
  }
  return value;
}

inline Rational weyl_character_value(const RootDatum& d, const Weight& lambda) {
  return weyl_character_value(RootSubsystem::full(d), lambda);
}

inline BigInt weyl_dim(const RootSubsystem& s, const Weight& lambda) {
  if (lambda.size() != static_cast<std::size_t>(s.ambient().rank())) throw InvalidArgument("weight rank mismatch");
  if (!s.is_dominant(lambda)) throw InvalidArgument("weyl_dim needs a dominant weight, got " + lambda.pretty());
  return to_bigint(weyl_character_value(s, lambda));
}

inline BigInt weyl_dim(const RootDatum& d, const Weight& lambda) { return weyl_dim(RootSubsystem::full(d), lambda); }

namespace detail {

inline std::int64_t checked_dim(const RootSubsystem& s, const Weight& lambda, std::int64_t ceiling) {
  BigInt dim = weyl_dim(s, lambda);
  if (dim > ceiling)
    throw ResourceLimit("representation " + lambda.pretty() + " has dimension " + dim.str() + " above the ceiling " +
                        std::to_string(ceiling));
  return dim.convert_to<std::int64_t>();
}

/// Dominant weights of V(lambda) with their Freudenthal multiplicities.
inline std::map<Weight, std::int64_t> dominant_multiplicities(const RootSubsystem& s, const Weight& lambda) {
  const auto& d = s.ambient();
  // Dominant weights below lambda form a set connected by subtracting positive roots.
  std::vector<Weight> order{lambda};
  std::unordered_set<Weight, WeightHash> seen{lambda};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (std::size_t k : s.roots()) {
      Weight next = order[head] - d.root_weight(k);
      if (!s.is_dominant(next) || seen.count(next)) continue;
      seen.insert(next);
      order.push_back(next);
    }
  }
  // Process by increasing depth so that every mu + k alpha is already known.
  std::sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
    auto ha = d.height_scaled(a), hb = d.height_scaled(b);
    if (ha != hb) return ha > hb;
    return a > b;
  });
  std::unordered_map<Weight, std::int64_t, WeightHash> mult;
  mult[lambda] = 1;
  auto lookup = [&](const Weight& w) -> std::int64_t {
    auto it = mult.find(s.to_dominant(w));
    return it == mult.end() ? 0 : it->second;
  };
  const Weight lambda_rho = lambda + lambda + s.two_rho();  // 2(lambda + rho)
  for (std::size_t idx = 1; idx < order.size(); ++idx) {
    const Weight& mu = order[idx];
    // 2((lambda+rho)^2 - (mu+rho)^2) = (lambda - mu, 2lambda + 2mu + 4rho)
    const Weight diff = lambda - mu;
    std::int64_t denom = d.inner_scaled(diff, lambda_rho + mu + mu + s.two_rho());
    BigInt numer = 0;
    for (std::size_t k : s.roots()) {
      const Weight& alpha = d.root_weight(k);
      Weight shifted = mu + alpha;
      for (int step = 1;; ++step) {
        std::int64_t m = lookup(shifted);
        if (m == 0) break;
        numer += BigInt(4) * d.inner_scaled(shifted, alpha) * m;
        shifted += alpha;
        if (step > 1000) fail_consistency("unbounded root string in Freudenthal recursion");
      }
    }
    if (denom <= 0) fail_consistency("nonpositive Freudenthal denominator at " + mu.pretty());
    if (numer % denom != 0) fail_consistency("non-integral Freudenthal multiplicity at " + mu.pretty());
    mult[mu] = (numer / denom).convert_to<std::int64_t>();
  }
  std::map<Weight, std::int64_t> out;
  for (const auto& w : order) {
    auto m = mult.at(w);
    if (m > 0) out.emplace(w, m);
  }
  return out;
}

inline std::vector<Weight> orbit(const RootSubsystem& s, const Weight& w) {
  std::vector<Weight> out{w};
  std::unordered_set<Weight, WeightHash> seen{w};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!s.kept(i)) continue;
      Weight r = s.reflect(i, out[head]);
      if (seen.insert(r).second) out.push_back(r);
    }
  }
  return out;
}

}  // namespace detail

/// Full weight multiset of the irreducible V(lambda) of the subsystem.
inline WeightSystem weight_system(const RootSubsystem& s, const Weight& lambda,
                                  std::int64_t ceiling = kDefaultDimCeiling) {
  const std::int64_t dim = detail::checked_dim(s, lambda, ceiling);
  WeightSystem ws;
  for (const auto& [mu, m] : detail::dominant_multiplicities(s, lambda))
    for (const auto& w : detail::orbit(s, mu)) ws.entries[w] += m;
  for (const auto& [w, m] : ws.entries) ws.total_dim += m;
  if (ws.total_dim != dim)
    detail::fail_consistency("weight system of " + lambda.pretty() + " has " + std::to_string(ws.total_dim) +
                             " weights, Weyl formula gives " + std::to_string(dim));
  return ws;
}

inline WeightSystem weight_system(const RootDatum& d, const Weight& lambda, std::int64_t ceiling = kDefaultDimCeiling) {
  return weight_system(RootSubsystem::full(d), lambda, ceiling);
}

enum class SquareKind { Exterior, Symmetric };

inline const char* to_string(SquareKind k) { return k == SquareKind::Exterior ? "exterior" : "symmetric"; }

struct BundlePiece {
  Weight weight;  // residual weight; the marked coordinate lies in [0, unit[m])
  int twist = 0;
  std::int64_t mult = 1;
  std::int64_t dim = 1;
  friend bool operator==(const BundlePiece&, const BundlePiece&) = default;
};

/// Formal sum of E_weight(twist), with E_w(t) = E_{w + t*unit}.
struct Decomposition {
  std::vector<BundlePiece> pieces;
  Weight unit;  // weight of O_X(1); zero vector for an untwisted decomposition

  Weight ambient_weight(const BundlePiece& p) const { return p.weight + p.twist * unit; }

  std::int64_t total_dim() const {
    std::int64_t t = 0;
    for (const auto& p : pieces) t += p.mult * p.dim;
    return t;
  }

  /// pieces keyed by ambient weight, multiplicities summed
  std::map<Weight, std::int64_t> ambient_multiset() const {
    std::map<Weight, std::int64_t> out;
    for (const auto& p : pieces) out[ambient_weight(p)] += p.mult;
    return out;
  }

  Decomposition twisted(int k) const {
    Decomposition d = *this;
    for (auto& p : d.pieces) p.twist += k;
    return d;
  }
};

/// Weight multiset of the exterior or symmetric square of a weight multiset.
inline std::map<Weight, std::int64_t> square_weights(const std::map<Weight, std::int64_t>& ws, SquareKind kind) {
  std::map<Weight, std::int64_t> out;
  for (auto a = ws.begin(); a != ws.end(); ++a) {
    const std::int64_t m = a->second;
    const std::int64_t diag = kind == SquareKind::Exterior ? m * (m - 1) / 2 : m * (m + 1) / 2;
    if (diag > 0) out[a->first + a->first] += diag;
    for (auto b = std::next(a); b != ws.end(); ++b) out[a->first + b->first] += m * b->second;
  }
  return out;
}

/// Strips a weight multiset of a representation of the subsystem into irreducibles.
/// `unit` and `marked` fix how twists are read off; with no marked node all twists are 0.
inline Decomposition decompose_character(const RootSubsystem& s, std::map<Weight, std::int64_t> remaining,
                                         const Weight& unit, std::optional<std::size_t> marked,
                                         std::int64_t ceiling = kDefaultDimCeiling) {
  const auto& d = s.ambient();
  Decomposition dec;
  dec.unit = unit;
  std::map<Weight, std::size_t> slot;
  for (;;) {
    const Weight* top = nullptr;
    std::int64_t top_h = 0;
    for (const auto& [w, m] : remaining) {
      if (m == 0) continue;
      auto h = d.height_scaled(w);
      if (!top || h > top_h || (h == top_h && w > *top)) {
        top = &w;
        top_h = h;
      }
    }
    if (!top) break;
    const Weight hw = *top;
    const std::int64_t copies = remaining.at(hw);
    if (copies < 0) detail::fail_consistency("negative multiplicity at " + hw.pretty());
    if (!s.is_dominant(hw)) detail::fail_consistency("maximal weight " + hw.pretty() + " is not dominant");
    WeightSystem ws = weight_system(s, hw, ceiling);
    for (const auto& [w, m] : ws.entries) {
      auto it = remaining.find(w);
      std::int64_t left = (it == remaining.end() ? 0 : it->second) - copies * m;
      if (left < 0)
        detail::fail_consistency("stripping " + hw.pretty() + " drives the multiplicity of " + w.pretty() +
                                 " negative");
      if (left == 0) {
        if (it != remaining.end()) remaining.erase(it);
      } else {
        it->second = left;
      }
    }
    BundlePiece p;
    if (marked) {
      const int u = unit[*marked];
      if (u <= 0) throw InvalidArgument("twist unit must have a positive marked coordinate");
      const int c = hw[*marked];
      p.twist = c >= 0 ? c / u : -((-c + u - 1) / u);
      p.weight = hw - p.twist * unit;
    } else {
      p.weight = hw;
    }
    p.mult = copies;
    p.dim = ws.total_dim;
    auto key = slot.find(hw);
    if (key != slot.end()) {
      dec.pieces[key->second].mult += copies;
    } else {
      slot[hw] = dec.pieces.size();
      dec.pieces.push_back(p);
    }
  }
  for (const auto& [w, m] : remaining)
    if (m != 0) detail::fail_consistency("leftover weight " + w.pretty() + " after stripping");
  return dec;
}

/// Square of the irreducible Levi representation with ambient highest weight lambda.
/// Twists are read in multiples of `unit` (default: the marked fundamental weight).
inline Decomposition square_decompose(const MarkedDatum& md, const Weight& lambda, SquareKind kind,
                                      std::optional<Weight> unit = std::nullopt,
                                      std::int64_t ceiling = kDefaultDimCeiling) {
  if (!is_bundle_weight(md, lambda))
    throw InvalidArgument("square_decompose needs a Levi-dominant weight, got " + lambda.pretty());
  const RootSubsystem levi = md.levi();
  const Weight u = unit.value_or(Weight::fundamental(static_cast<std::size_t>(md.ambient().rank()), md.marked_node()));
  WeightSystem ws = weight_system(levi, lambda, ceiling);
  Decomposition dec = decompose_character(levi, square_weights(ws.entries, kind), u, md.marked_index(), ceiling);
  const std::int64_t n = ws.total_dim;
  const std::int64_t expect = kind == SquareKind::Exterior ? n * (n - 1) / 2 : n * (n + 1) / 2;
  if (dec.total_dim() != expect) detail::fail_consistency("square dimension identity failed");
  return dec;
}

/// Same, with the representation given per Levi component plus a center coordinate.
inline Decomposition square_decompose(const MarkedDatum& md, const LeviDiagram& ld, const LeviBranch& rep,
                                      SquareKind kind, std::optional<Weight> unit = std::nullopt,
                                      std::int64_t ceiling = kDefaultDimCeiling) {
  return square_decompose(md, lift_from_levi(md, ld, rep), kind, std::move(unit), ceiling);
}

/// Square of an irreducible representation of the simple algebra itself.
inline Decomposition square_decompose(const RootDatum& d, const Weight& lambda, SquareKind kind,
                                      std::int64_t ceiling = kDefaultDimCeiling) {
  const RootSubsystem full = RootSubsystem::full(d);
  WeightSystem ws = weight_system(full, lambda, ceiling);
  Decomposition dec = decompose_character(full, square_weights(ws.entries, kind),
                                          Weight(static_cast<std::size_t>(d.rank())), std::nullopt, ceiling);
  const std::int64_t n = ws.total_dim;
  const std::int64_t expect = kind == SquareKind::Exterior ? n * (n - 1) / 2 : n * (n + 1) / 2;
  if (dec.total_dim() != expect) detail::fail_consistency("square dimension identity failed");
  return dec;
}

/// Character (weight multiset) of a decomposition, recomputed from its pieces.
inline std::map<Weight, std::int64_t> character(const RootSubsystem& s, const Decomposition& dec,
                                                std::int64_t ceiling = kDefaultDimCeiling) {
  std::map<Weight, std::int64_t> out;
  for (const auto& p : dec.pieces)
    for (const auto& [w, m] : weight_system(s, dec.ambient_weight(p), ceiling).entries) out[w] += p.mult * m;
  return out;
}

}  // namespace adjfol
