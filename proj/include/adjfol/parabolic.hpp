#pragma once

// Maximal parabolics P(alpha) given by one marked Dynkin node: Levi diagram,
// Levi-dominance of bundle weights, branching, and nilradical counts.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adjfol/rootsystem.hpp"
#include "adjfol/weylgroup.hpp"

namespace adjfol {

/// The root subsystem spanned by a subset of simple roots, kept in ambient
/// coordinates. Weights stay ambient weights; only the kept nodes constrain them.
class RootSubsystem {
 public:
  RootSubsystem(RootDatum ambient, std::vector<bool> kept) : ambient_(std::move(ambient)), kept_(std::move(kept)) {
    if (kept_.size() != static_cast<std::size_t>(ambient_.rank())) throw InvalidArgument("node mask size mismatch");
    two_rho_ = Weight(static_cast<std::size_t>(ambient_.rank()));
    for (std::size_t k = 0; k < ambient_.num_positive_roots(); ++k) {
      const auto& r = ambient_.positive_roots()[k];
      bool inside = true;
      for (int j = 0; j < ambient_.rank(); ++j)
        if (!kept_[j] && r[j] != 0) inside = false;
      if (!inside) continue;
      roots_.push_back(k);
      two_rho_ += ambient_.root_weight(k);
    }
  }

  /// The whole datum as its own subsystem.
  static RootSubsystem full(const RootDatum& d) {
    return RootSubsystem(d, std::vector<bool>(static_cast<std::size_t>(d.rank()), true));
  }

  const RootDatum& ambient() const { return ambient_; }
  bool kept(std::size_t i) const { return kept_[i]; }
  /// Indices into ambient().positive_roots().
  const std::vector<std::size_t>& roots() const { return roots_; }
  const Weight& two_rho() const { return two_rho_; }

  bool is_dominant(const Weight& w) const {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (kept_[i] && w[i] < 0) return false;
    return true;
  }

  Weight reflect(std::size_t i, const Weight& w) const { return simple_reflection(ambient_, static_cast<int>(i) + 1, w); }

  Weight to_dominant(Weight w) const {
    for (;;) {
      std::size_t i = 0;
      while (i < w.size() && !(kept_[i] && w[i] < 0)) ++i;
      if (i == w.size()) return w;
      w = reflect(i, w);
    }
  }

 private:
  RootDatum ambient_;
  std::vector<bool> kept_;
  std::vector<std::size_t> roots_;
  Weight two_rho_;
};

/// A root datum with one marked node, i.e. the maximal parabolic P(alpha_marked).
class MarkedDatum {
 public:
  MarkedDatum(RootDatum ambient, int marked_node) : ambient_(std::move(ambient)), marked_(marked_node) {
    ambient_.check_node(marked_);
  }
  const RootDatum& ambient() const { return ambient_; }
  int marked_node() const { return marked_; }
  std::size_t marked_index() const { return static_cast<std::size_t>(marked_ - 1); }

  RootSubsystem levi() const {
    std::vector<bool> kept(static_cast<std::size_t>(ambient_.rank()), true);
    kept[marked_index()] = false;
    return RootSubsystem(ambient_, std::move(kept));
  }

 private:
  RootDatum ambient_;
  int marked_;
};

struct LeviNode {
  int component = 0;   // 0-based index into LeviDiagram::components
  int local_node = 0;  // 1-based Bourbaki label inside that component
  friend bool operator==(const LeviNode&, const LeviNode&) = default;
};

struct LeviDiagram {
  std::vector<RootDatum> components;
  std::map<int, LeviNode> node_map;  // ambient node (1-based) -> component node

  int rank() const {
    int r = 0;
    for (const auto& c : components) r += c.rank();
    return r;
  }
  /// Ambient nodes of component c ordered by local label.
  std::vector<int> ambient_nodes(int c) const {
    std::vector<int> out(static_cast<std::size_t>(components.at(static_cast<std::size_t>(c)).rank()));
    for (const auto& [amb, ln] : node_map)
      if (ln.component == c) out[static_cast<std::size_t>(ln.local_node - 1)] = amb;
    return out;
  }
  std::string name() const {
    if (components.empty()) return "trivial";
    std::string s;
    for (const auto& c : components) s += (s.empty() ? "" : "x") + c.name();
    return s;
  }
};

namespace detail {

/// Smallest (in ambient order) bijection local -> ambient matching the Cartan entries.
inline bool match_component(const std::vector<int>& amb, const std::vector<std::vector<int>>& ambient_cartan,
                            const RootDatum& cand, std::vector<int>& local_of) {
  const std::size_t r = amb.size();
  local_of.assign(r, -1);
  std::vector<bool> used(r, false);
  std::function<bool(std::size_t)> go = [&](std::size_t pos) -> bool {
    if (pos == r) return true;
    for (std::size_t l = 0; l < r; ++l) {
      if (used[l]) continue;
      bool ok = true;
      for (std::size_t q = 0; q < pos && ok; ++q) {
        auto lq = static_cast<std::size_t>(local_of[q]);
        ok = ambient_cartan[amb[pos]][amb[q]] == cand.cartan()[l][lq] &&
             ambient_cartan[amb[q]][amb[pos]] == cand.cartan()[lq][l];
      }
      if (!ok) continue;
      used[l] = true;
      local_of[pos] = static_cast<int>(l);
      if (go(pos + 1)) return true;
      used[l] = false;
    }
    return false;
  };
  return go(0);
}

inline std::pair<RootDatum, std::vector<int>> identify_component(const std::vector<int>& amb,
                                                                 const std::vector<std::vector<int>>& cartan) {
  const int r = static_cast<int>(amb.size());
  for (char t : std::string("ABCDEFG")) {
    if (!validate_type(t, r, 1 << 20).empty()) continue;
    RootDatum cand = build_datum(t, r, 1 << 20);
    std::vector<int> local_of;
    if (match_component(amb, cartan, cand, local_of)) return {cand, local_of};
  }
  fail_consistency("Levi component matches no simple type");
}

}  // namespace detail

/// Connected components of the diagram with the marked node removed, ordered by
/// their smallest ambient node.
inline LeviDiagram levi_diagram(const MarkedDatum& md) {
  const auto& c = md.ambient().cartan();
  const int n = md.ambient().rank();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  comp[md.marked_index()] = -2;
  LeviDiagram out;
  int next = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[start] != -1) continue;
    std::vector<int> members;
    std::vector<int> stack{start};
    comp[start] = next;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      members.push_back(i);
      for (int j = 0; j < n; ++j)
        if (j != i && c[i][j] != 0 && comp[j] == -1) {
          comp[j] = next;
          stack.push_back(j);
        }
    }
    std::sort(members.begin(), members.end());
    auto [datum, local_of] = detail::identify_component(members, c);
    for (std::size_t k = 0; k < members.size(); ++k)
      out.node_map[members[k] + 1] = LeviNode{next, local_of[k] + 1};
    out.components.push_back(std::move(datum));
    ++next;
  }
  return out;
}

/// Levi-dominance: every unmarked coordinate nonnegative; the marked one is free.
inline bool is_bundle_weight(const MarkedDatum& md, const Weight& w) {
  if (w.size() != static_cast<std::size_t>(md.ambient().rank())) throw InvalidArgument("weight rank mismatch");
  for (std::size_t i = 0; i < w.size(); ++i)
    if (i != md.marked_index() && w[i] < 0) return false;
  return true;
}

struct LeviBranch {
  std::vector<Weight> levi_weights;  // one per Levi component, local coordinates
  int center_coord = 0;              // the marked coordinate
};

inline LeviBranch branch_to_levi(const MarkedDatum& md, const LeviDiagram& ld, const Weight& w) {
  if (!is_bundle_weight(md, w))
    throw InvalidArgument("weight " + w.pretty() + " is not Levi-dominant at marked node " +
                          std::to_string(md.marked_node()));
  LeviBranch b;
  for (const auto& comp : ld.components) b.levi_weights.emplace_back(static_cast<std::size_t>(comp.rank()));
  for (const auto& [amb, ln] : ld.node_map)
    b.levi_weights[static_cast<std::size_t>(ln.component)][static_cast<std::size_t>(ln.local_node - 1)] = w.at_node(amb);
  b.center_coord = w[md.marked_index()];
  return b;
}

inline LeviBranch branch_to_levi(const MarkedDatum& md, const Weight& w) { return branch_to_levi(md, levi_diagram(md), w); }

/// Inverse of branch_to_levi.
inline Weight lift_from_levi(const MarkedDatum& md, const LeviDiagram& ld, const LeviBranch& b) {
  Weight w(static_cast<std::size_t>(md.ambient().rank()));
  if (b.levi_weights.size() != ld.components.size()) throw InvalidArgument("one Levi weight per component expected");
  for (const auto& [amb, ln] : ld.node_map) {
    const auto& lw = b.levi_weights[static_cast<std::size_t>(ln.component)];
    if (lw.size() != static_cast<std::size_t>(ld.components[static_cast<std::size_t>(ln.component)].rank()))
      throw InvalidArgument("Levi weight rank mismatch");
    w[static_cast<std::size_t>(amb - 1)] = lw[static_cast<std::size_t>(ln.local_node - 1)];
  }
  w[md.marked_index()] = b.center_coord;
  return w;
}

/// Number of positive roots with a nonzero coefficient at any of the given nodes
/// (1-based); equals dim G/P for the parabolic with those nodes marked.
inline int nilradical_size(const RootDatum& d, const std::vector<int>& nodes) {
  for (int v : nodes) d.check_node(v);
  int count = 0;
  for (const auto& r : d.positive_roots()) {
    bool hit = false;
    for (int v : nodes) hit = hit || r[static_cast<std::size_t>(v - 1)] != 0;
    count += hit ? 1 : 0;
  }
  return count;
}

inline int nilradical_size(const MarkedDatum& md) { return nilradical_size(md.ambient(), {md.marked_node()}); }

}  // namespace adjfol
