#pragma once

// Root data of the simple Lie algebras A-G in Bourbaki numbering.
//
// Conventions used throughout the library:
//   * Cartan entry C[i][j] = <alpha_i, alpha_j^vee>, so row i of C is the simple
//     root alpha_i written in fundamental-weight coordinates (A2: alpha_1 = 2l1 - l2).
//   * Weights live in fundamental-weight coordinates, roots in simple-root
//     coordinates; root_weight() converts.
//   * Public node numbers are 1-based Bourbaki labels; vectors are 0-based.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "adjfol/errors.hpp"
#include "adjfol/rational.hpp"

namespace adjfol {

/// Integer vector in the fundamental-weight basis.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : c_(rank, 0) {}
  explicit Weight(std::vector<int> coords) : c_(std::move(coords)) {}
  Weight(std::initializer_list<int> coords) : c_(coords) {}

  static Weight fundamental(std::size_t rank, int node) {
    Weight w(rank);
    w.c_.at(static_cast<std::size_t>(node - 1)) = 1;
    return w;
  }

  std::size_t size() const { return c_.size(); }
  int operator[](std::size_t i) const { return c_[i]; }
  int& operator[](std::size_t i) { return c_[i]; }
  const std::vector<int>& coords() const { return c_; }

  /// Coordinate at a 1-based node label.
  int at_node(int node) const { return c_.at(static_cast<std::size_t>(node - 1)); }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](int v) { return v == 0; });
  }
  bool is_dominant() const {
    return std::all_of(c_.begin(), c_.end(), [](int v) { return v >= 0; });
  }

  Weight& operator+=(const Weight& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a) {
    for (auto& v : a.c_) v *= k;
    return a;
  }
  friend Weight operator-(Weight a) { return -1 * std::move(a); }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  /// "l1 - 2l2 + l3" style rendering; "0" for the zero weight.
  std::string pretty() const {
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      int v = c_[i];
      if (v == 0) continue;
      if (!out.empty()) out += v > 0 ? " + " : " - ";
      else if (v < 0) out += "-";
      int a = v < 0 ? -v : v;
      if (a != 1) out += std::to_string(a);
      out += "l" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
  }

 private:
  void check_same(const Weight& o) const {
    if (o.c_.size() != c_.size()) throw InvalidArgument("weight rank mismatch");
  }
  std::vector<int> c_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : w.coords()) h = (h ^ static_cast<std::size_t>(v + 0x9e37)) * 1099511628211ull;
    return h;
  }
};

/// Root vector in simple-root coordinates.
using RootVector = std::vector<int>;

namespace detail {

inline std::vector<std::vector<int>> bourbaki_cartan(char type, int n) {
  std::vector<std::vector<int>> c(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  auto link = [&](int i, int j) {  // simple edge between 1-based nodes
    c[i - 1][j - 1] = -1;
    c[j - 1][i - 1] = -1;
  };
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  switch (type) {
    case 'A':
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;  // alpha_n short
      c[n - 1][n - 2] = -1;
      break;
    case 'C':
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -1;  // alpha_n long
      c[n - 1][n - 2] = -2;
      break;
    case 'D':
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case 'E':
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(1, 2);
      c[1][2] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      c[2][1] = -1;
      link(3, 4);
      break;
    case 'G':
      c[0][1] = -1;  // alpha_1 short, alpha_2 long
      c[1][0] = -3;
      break;
    default:
      break;
  }
  return c;
}

inline std::string validate_type(char type, int rank, int max_classical_rank) {
  auto msg = [&](const std::string& why) {
    return std::string("invalid simple type ") + type + std::to_string(rank) + ": " + why;
  };
  if (rank < 1) return msg("rank must be positive");
  switch (type) {
    case 'A':
      break;
    case 'B':
      if (rank < 2) return msg("type B requires rank >= 2");
      break;
    case 'C':
      if (rank < 2) return msg("type C requires rank >= 2");
      break;
    case 'D':
      if (rank < 4) return msg("type D requires rank >= 4");
      break;
    case 'E':
      if (rank < 6 || rank > 8) return msg("type E requires 6 <= rank <= 8");
      return {};
    case 'F':
      if (rank != 4) return msg("type F requires rank 4");
      return {};
    case 'G':
      if (rank != 2) return msg("type G requires rank 2");
      return {};
    default:
      return msg("type letter must be one of A,B,C,D,E,F,G");
  }
  if (rank > max_classical_rank)
    return msg("classical rank exceeds the configured ceiling " + std::to_string(max_classical_rank));
  return {};
}

/// Inverse of a small integer matrix over Q.
inline std::vector<std::vector<Rational>> rational_inverse(const std::vector<std::vector<int>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) fail_consistency("singular Cartan matrix");
    std::swap(a[piv], a[col]);
    Rational inv = 1 / a[col][col];
    for (auto& v : a[col]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

inline std::int64_t lcm_of_denominators(const std::vector<std::vector<Rational>>& m) {
  BigInt l = 1;
  for (const auto& row : m)
    for (const auto& v : row) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(v));
  return l.convert_to<std::int64_t>();
}

}  // namespace detail

/// Static data of a simple root system. Immutable after construction.
class RootDatum {
 public:
  char type_letter() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, type_) + std::to_string(rank_); }

  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  int cartan(int i, int j) const { return cartan_[i][j]; }  // 0-based

  /// d_i with diag(d)·C symmetric.
  const std::vector<int>& symmetrizers() const { return symmetrizers_; }
  /// (alpha_i, alpha_i)/2 normalized so that short roots have 1.
  const std::vector<int>& half_norms() const { return half_norms_; }

  /// Positive roots in simple-root coordinates, sorted by height then lexicographically.
  const std::vector<RootVector>& positive_roots() const { return roots_; }
  std::size_t num_positive_roots() const { return roots_.size(); }

  /// Positive root k in fundamental-weight coordinates.
  const Weight& root_weight(std::size_t k) const { return roots_fund_[k]; }
  /// Coordinates of the coroot of positive root k in the simple-coroot basis.
  const std::vector<int>& coroot(std::size_t k) const { return coroots_[k]; }

  /// alpha_node in fundamental coordinates (node is 1-based).
  Weight simple_root(int node) const {
    check_node(node);
    return Weight(cartan_[node - 1]);
  }

  int dim_lie_algebra() const { return rank_ + 2 * static_cast<int>(roots_.size()); }

  /// Scaled inner product: (u, v) * gram_scale() as an exact integer.
  std::int64_t inner_scaled(const Weight& u, const Weight& v) const {
    std::int64_t s = 0;
    for (int i = 0; i < rank_; ++i) {
      if (u[i] == 0) continue;
      for (int j = 0; j < rank_; ++j) s += static_cast<std::int64_t>(u[i]) * gram_[i][j] * v[j];
    }
    return s;
  }
  std::int64_t gram_scale() const { return gram_scale_; }

  /// Height of a weight in the simple-root basis, scaled by height_scale().
  std::int64_t height_scaled(const Weight& w) const {
    std::int64_t s = 0;
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) s += static_cast<std::int64_t>(w[i]) * inv_cartan_[i][j];
    return s;
  }
  std::int64_t height_scale() const { return inv_scale_; }

  void check_node(int node) const {
    if (node < 1 || node > rank_)
      throw InvalidArgument("node " + std::to_string(node) + " out of range 1.." + std::to_string(rank_) +
                            " for " + name());
  }

  friend bool operator==(const RootDatum& a, const RootDatum& b) {
    return a.type_ == b.type_ && a.rank_ == b.rank_ && a.cartan_ == b.cartan_ && a.roots_ == b.roots_;
  }

  friend RootDatum build_datum(char type_letter, int rank, int max_classical_rank);

 private:
  RootDatum() = default;
  void init_norms();
  void generate_roots();
  void init_derived();

  char type_ = 'A';
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> symmetrizers_;
  std::vector<int> half_norms_;
  std::vector<RootVector> roots_;
  std::vector<Weight> roots_fund_;
  std::vector<std::vector<int>> coroots_;
  std::vector<std::vector<std::int64_t>> gram_;
  std::int64_t gram_scale_ = 1;
  std::vector<std::vector<std::int64_t>> inv_cartan_;
  std::int64_t inv_scale_ = 1;
};

inline void RootDatum::init_norms() {
  // C[i][j] h_j is symmetric; propagate ratios over the connected diagram.
  std::vector<Rational> h(static_cast<std::size_t>(rank_), Rational(0));
  h[0] = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < rank_; ++j) {
      if (i == j || cartan_[i][j] == 0 || h[j] != 0) continue;
      h[j] = h[i] * cartan_[j][i] / cartan_[i][j];
      stack.push_back(j);
    }
  }
  Rational smallest = *std::min_element(h.begin(), h.end());
  half_norms_.resize(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) half_norms_[i] = to_int64(h[i] / smallest);
  int longest = *std::max_element(half_norms_.begin(), half_norms_.end());
  symmetrizers_.resize(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) symmetrizers_[i] = longest / half_norms_[i];
}

inline void RootDatum::generate_roots() {
  std::set<RootVector> known;
  std::vector<RootVector> layer;
  for (int i = 0; i < rank_; ++i) {
    RootVector e(static_cast<std::size_t>(rank_), 0);
    e[i] = 1;
    layer.push_back(e);
    known.insert(e);
  }
  std::vector<RootVector> all = layer;
  while (!layer.empty()) {
    std::set<RootVector> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < rank_; ++i) {
        // alpha_i-string through beta: beta - p alpha_i, ..., beta + q alpha_i
        int p = 0;
        RootVector down = beta;
        for (;;) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        int pair = 0;  // <beta, alpha_i^vee>
        for (int j = 0; j < rank_; ++j) pair += beta[j] * cartan_[j][i];
        int q = p - pair;
        if (q > 0) {
          RootVector up = beta;
          up[i] += 1;
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) {
      known.insert(r);
      all.push_back(r);
    }
  }
  auto height = [](const RootVector& r) { return std::accumulate(r.begin(), r.end(), 0); };
  std::sort(all.begin(), all.end(), [&](const RootVector& a, const RootVector& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  roots_ = std::move(all);
}

inline void RootDatum::init_derived() {
  roots_fund_.clear();
  coroots_.clear();
  for (const auto& beta : roots_) {
    Weight w(static_cast<std::size_t>(rank_));
    for (int j = 0; j < rank_; ++j)
      for (int k = 0; k < rank_; ++k) w[k] += beta[j] * cartan_[j][k];
    roots_fund_.push_back(w);
    // (beta, beta)/2 = sum_ij beta_i beta_j C[i][j] h_j / 2
    std::int64_t twice_half = 0;
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j)
        twice_half += static_cast<std::int64_t>(beta[i]) * beta[j] * cartan_[i][j] * half_norms_[j];
    if (twice_half % 2 != 0) detail::fail_consistency("odd root norm");
    std::int64_t hb = twice_half / 2;
    std::vector<int> co(static_cast<std::size_t>(rank_));
    for (int j = 0; j < rank_; ++j) {
      std::int64_t num = static_cast<std::int64_t>(beta[j]) * half_norms_[j];
      if (num % hb != 0) detail::fail_consistency("non-integral coroot");
      co[j] = static_cast<int>(num / hb);
    }
    coroots_.push_back(co);
  }

  // Gram matrix of fundamental weights: G = diag(h) C^{-T}.
  auto inv = detail::rational_inverse(cartan_);
  std::vector<std::vector<Rational>> g(static_cast<std::size_t>(rank_), std::vector<Rational>(static_cast<std::size_t>(rank_)));
  for (int i = 0; i < rank_; ++i)
    for (int k = 0; k < rank_; ++k) g[i][k] = inv[k][i] * half_norms_[i];
  gram_scale_ = detail::lcm_of_denominators(g);
  gram_.assign(static_cast<std::size_t>(rank_), std::vector<std::int64_t>(static_cast<std::size_t>(rank_)));
  for (int i = 0; i < rank_; ++i)
    for (int k = 0; k < rank_; ++k) {
      gram_[i][k] = to_int64(g[i][k] * gram_scale_);
      if (i > k && gram_[i][k] != gram_[k][i]) detail::fail_consistency("asymmetric Gram matrix for " + name());
    }

  // Simple-root coordinates of lambda_i are row i of C^{-1}.
  inv_scale_ = detail::lcm_of_denominators(inv);
  inv_cartan_.assign(static_cast<std::size_t>(rank_), std::vector<std::int64_t>(static_cast<std::size_t>(rank_)));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) inv_cartan_[i][j] = to_int64(inv[i][j] * inv_scale_);
}

/// Builds the root datum of a simple type; throws InvalidArgument naming the violated constraint.
inline RootDatum build_datum(char type_letter, int rank, int max_classical_rank = 10) {
  if (auto why = detail::validate_type(type_letter, rank, max_classical_rank); !why.empty())
    throw InvalidArgument(why);
  RootDatum d;
  d.type_ = type_letter;
  d.rank_ = rank;
  d.cartan_ = detail::bourbaki_cartan(type_letter, rank);
  d.init_norms();
  d.generate_roots();
  d.init_derived();
  return d;
}

/// delta = sum of the fundamental weights.
inline Weight weyl_vector(const RootDatum& d) {
  return Weight(std::vector<int>(static_cast<std::size_t>(d.rank()), 1));
}

/// Highest root in fundamental coordinates: the weight of the adjoint representation.
inline Weight highest_root(const RootDatum& d) { return d.root_weight(d.num_positive_roots() - 1); }

/// <w, alpha^vee> for positive root number `root_index`.
inline int pairing(const RootDatum& d, const Weight& w, std::size_t root_index) {
  if (root_index >= d.num_positive_roots())
    throw InvalidArgument("positive root index " + std::to_string(root_index) + " out of range");
  if (w.size() != static_cast<std::size_t>(d.rank())) throw InvalidArgument("weight rank mismatch");
  const auto& co = d.coroot(root_index);
  int s = 0;
  for (int j = 0; j < d.rank(); ++j) s += co[j] * w[j];
  return s;
}

/// Index of the positive root with the given simple-root coordinates, or npos.
inline std::size_t find_positive_root(const RootDatum& d, const RootVector& r) {
  const auto& roots = d.positive_roots();
  auto it = std::find(roots.begin(), roots.end(), r);
  return it == roots.end() ? static_cast<std::size_t>(-1) : static_cast<std::size_t>(it - roots.begin());
}

/// dim g per the closed-form tables, for cross-checking the root closure.
inline int known_lie_dimension(char type, int n) {
  switch (type) {
    case 'A': return (n + 1) * (n + 1) - 1;
    case 'B': return n * (2 * n + 1);
    case 'C': return n * (2 * n + 1);
    case 'D': return n * (2 * n - 1);
    case 'E': return n == 6 ? 78 : n == 7 ? 133 : 248;
    case 'F': return 52;
    case 'G': return 14;
    default: return 0;
  }
}

}  // namespace adjfol
