#pragma once

// Weyl group action on weights: simple reflections and the dot-action chamber
// reduction used by Bott-Borel-Weil. Group elements are never materialized.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "adjfol/rootsystem.hpp"

namespace adjfol {

/// s_i(w) = w - <w, alpha_i^vee> alpha_i, node i 1-based.
inline Weight simple_reflection(const RootDatum& d, int node, const Weight& w) {
  d.check_node(node);
  if (w.size() != static_cast<std::size_t>(d.rank())) throw InvalidArgument("weight rank mismatch");
  int a = w[static_cast<std::size_t>(node - 1)];
  if (a == 0) return w;
  Weight out = w;
  const auto& row = d.cartan()[static_cast<std::size_t>(node - 1)];
  for (int j = 0; j < d.rank(); ++j) out[j] -= a * row[j];
  return out;
}

struct DotResult {
  enum class Status { Singular, Regular };
  Status status = Status::Singular;
  int index_p = 0;          // only meaningful when Regular
  Weight dominant_weight;   // w(lambda + delta) - delta, only when Regular

  bool regular() const { return status == Status::Regular; }
  bool singular() const { return status == Status::Singular; }
  friend bool operator==(const DotResult&, const DotResult&) = default;
};

/// Chooses which negative coordinate to reflect at; receives the 0-based indices
/// of negative coordinates (never empty) and returns one of them.
using NegativePicker = std::function<std::size_t(const std::vector<std::size_t>&)>;

inline std::size_t pick_lowest(const std::vector<std::size_t>& negatives) { return negatives.front(); }

/// Classifies lambda + delta as singular or regular of index p.
inline DotResult dot_classify(const RootDatum& d, const Weight& lambda, const NegativePicker& pick = pick_lowest) {
  if (lambda.size() != static_cast<std::size_t>(d.rank())) throw InvalidArgument("weight rank mismatch");
  Weight v = lambda + weyl_vector(d);
  const int bound = 2 * static_cast<int>(d.num_positive_roots());
  int steps = 0;
  std::vector<std::size_t> negatives;
  for (;;) {
    negatives.clear();
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) return DotResult{};  // on a wall, and walls are W-stable
      if (v[i] < 0) negatives.push_back(i);
    }
    if (negatives.empty()) break;
    std::size_t i = pick(negatives);
    if (i >= v.size() || v[i] >= 0) throw InvalidArgument("negative-coordinate picker returned a non-negative index");
    v = simple_reflection(d, static_cast<int>(i) + 1, v);
    if (++steps > bound) detail::fail_consistency("dot reduction exceeded " + std::to_string(bound) + " steps");
  }
  DotResult r;
  r.status = DotResult::Status::Regular;
  r.index_p = steps;
  r.dominant_weight = v - weyl_vector(d);
  return r;
}

/// Moves w to the dominant chamber by ordinary reflections; returns the dominant
/// representative and the number of reflections used.
inline std::pair<Weight, int> to_dominant(const RootDatum& d, Weight w) {
  int steps = 0;
  for (;;) {
    std::size_t i = 0;
    while (i < w.size() && w[i] >= 0) ++i;
    if (i == w.size()) return {w, steps};
    w = simple_reflection(d, static_cast<int>(i) + 1, w);
    ++steps;
  }
}

}  // namespace adjfol
