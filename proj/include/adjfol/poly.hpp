#pragma once

// Sparse multivariate polynomials over Q with at most 16 variables, lex order
// with variable 0 largest. On P^n x P^n the variables are x_0..x_n, y_0..y_n.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adjfol/errors.hpp"
#include "adjfol/rational.hpp"

namespace adjfol {

inline constexpr int kMaxVars = 16;
using Monomial = std::array<std::uint8_t, kMaxVars>;

inline int monomial_degree(const Monomial& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

class Poly {
 public:
  using Terms = std::map<Monomial, Rational>;

  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {
    if (nvars < 0 || nvars > kMaxVars) throw InvalidArgument("polynomial ring needs 0..16 variables");
  }

  static Poly constant(int nvars, const Rational& c) {
    Poly p(nvars);
    p.add_term(Monomial{}, c);
    return p;
  }
  static Poly variable(int nvars, int v) {
    Poly p(nvars);
    p.check_var(v);
    Monomial m{};
    m[static_cast<std::size_t>(v)] = 1;
    p.add_term(m, 1);
    return p;
  }
  static Poly monomial(int nvars, const Monomial& m, const Rational& c) {
    Poly p(nvars);
    p.add_term(m, c);
    return p;
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0); }
  Rational constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  /// Largest term in lex order.
  const std::pair<const Monomial, Rational>& leading() const {
    if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading term");
    return *terms_.rbegin();
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    merge_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    merge_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out(std::max(a.nvars_, b.nvars_));
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(mul(ma, mb), ca * cb);
    return out;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly pow(int e) const {
    Poly out = constant(nvars_, 1), base = *this;
    while (e > 0) {
      if (e & 1) out *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return out;
  }

  Poly derivative(int v) const {
    check_var(v);
    Poly out(nvars_);
    for (const auto& [m, c] : terms_) {
      auto e = m[static_cast<std::size_t>(v)];
      if (e == 0) continue;
      Monomial n = m;
      n[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(e - 1);
      out.add_term(n, c * e);
    }
    return out;
  }

  int degree_in(int v) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max<int>(d, m[static_cast<std::size_t>(v)]);
    return d;
  }
  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
    return d;
  }
  bool uses(int v) const { return degree_in(v) > 0; }

  /// Replaces every variable v by images[v]; all images must share one ring.
  Poly compose(const std::vector<Poly>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw InvalidArgument("compose needs one image per variable");
    int target = images.empty() ? 0 : images.front().nvars();
    std::vector<std::vector<Poly>> powers(images.size());
    Poly out(target);
    for (const auto& [m, c] : terms_) {
      Poly t = constant(target, c);
      for (std::size_t v = 0; v < images.size(); ++v) {
        if (m[v] == 0) continue;
        auto& pw = powers[v];
        if (pw.empty()) pw.push_back(constant(target, 1));
        while (pw.size() <= m[v]) pw.push_back(pw.back() * images[v]);
        t *= pw[m[v]];
      }
      out += t;
    }
    return out;
  }

  Poly substitute(int v, const Poly& image) const {
    std::vector<Poly> imgs;
    for (int i = 0; i < nvars_; ++i) imgs.push_back(i == v ? image : variable(nvars_, i));
    return compose(imgs);
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw InvalidArgument("evaluation point has wrong length");
    Rational s = 0;
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (int v = 0; v < nvars_; ++v)
        for (int e = 0; e < m[static_cast<std::size_t>(v)]; ++e) t *= point[static_cast<std::size_t>(v)];
      s += t;
    }
    return s;
  }

  /// Coefficients as a polynomial in v: v-power -> coefficient (free of v).
  std::map<int, Poly> coefficients_in(int v) const {
    std::map<int, Poly> out;
    for (const auto& [m, c] : terms_) {
      Monomial n = m;
      int e = n[static_cast<std::size_t>(v)];
      n[static_cast<std::size_t>(v)] = 0;
      auto it = out.try_emplace(e, nvars_).first;
      it->second.add_term(n, c);
    }
    return out;
  }

  /// Same polynomial viewed in a ring with a different number of variables.
  Poly reringed(int nvars) const {
    Poly out(nvars);
    for (const auto& [m, c] : terms_) {
      for (int v = nvars; v < kMaxVars; ++v)
        if (m[static_cast<std::size_t>(v)] != 0) throw InvalidArgument("polynomial uses a dropped variable");
      out.add_term(m, c);
    }
    return out;
  }

  /// Scale so that the leading coefficient is 1.
  Poly monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading().second);
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      bool unit_mono = monomial_degree(m) == 0;
      Rational a = c < 0 ? Rational(-c) : c;
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      if (a != 1 || unit_mono) s += adjfol::to_string(a);
      bool first = a == 1;
      for (int v = 0; v < nvars_; ++v) {
        int e = m[static_cast<std::size_t>(v)];
        if (e == 0) continue;
        if (!first) s += "*";
        first = false;
        s += names.at(static_cast<std::size_t>(v));
        if (e > 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  }

 private:
  static Monomial mul(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < m.size(); ++i) {
      int e = a[i] + b[i];
      if (e > 255) throw ResourceLimit("monomial exponent overflow");
      m[i] = static_cast<std::uint8_t>(e);
    }
    return m;
  }
  void check_var(int v) const {
    if (v < 0 || v >= nvars_) throw InvalidArgument("variable index " + std::to_string(v) + " out of range");
  }
  void merge_ring(const Poly& o) { nvars_ = std::max(nvars_, o.nvars_); }

  int nvars_ = 0;
  Terms terms_;
};

/// Exact division in Q[vars]; nullopt if b does not divide a.
inline std::optional<Poly> try_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
  Poly q(std::max(a.nvars(), b.nvars())), r = a;
  const auto& [mb, cb] = b.leading();
  while (!r.is_zero()) {
    const auto [mr, cr] = r.leading();
    Monomial t;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (mr[i] < mb[i]) return std::nullopt;
      t[i] = static_cast<std::uint8_t>(mr[i] - mb[i]);
    }
    Poly term = Poly::monomial(q.nvars(), t, cr / cb);
    q += term;
    r -= term * b;
  }
  return q;
}

inline Poly exact_divide(const Poly& a, const Poly& b) {
  auto q = try_divide(a, b);
  if (!q) detail::fail_consistency("inexact polynomial division");
  return *q;
}

Poly poly_gcd(const Poly& a, const Poly& b);

namespace detail {

inline int main_variable(const Poly& a, const Poly& b) {
  for (int v = std::max(a.nvars(), b.nvars()) - 1; v >= 0; --v)
    if ((v < a.nvars() && a.uses(v)) || (v < b.nvars() && b.uses(v))) return v;
  return -1;
}

inline Poly content_in(const Poly& a, int v) {
  Poly g(a.nvars());
  for (const auto& [e, c] : a.coefficients_in(v)) {
    g = g.is_zero() ? c.monic() : poly_gcd(g, c);
    if (g.is_constant()) return Poly::constant(a.nvars(), 1);
  }
  return g;
}

inline Poly primitive_part_in(const Poly& a, int v) {
  if (a.is_zero()) return a;
  return exact_divide(a, content_in(a, v));
}

inline Poly lead_in(const Poly& a, int v) {
  auto cs = a.coefficients_in(v);
  return cs.rbegin()->second;
}

/// Pseudo-remainder of a by b as polynomials in v.
inline Poly pseudo_remainder(Poly r, const Poly& b, int v) {
  const int db = b.degree_in(v);
  const Poly lb = lead_in(b, v);
  const Poly x = Poly::variable(std::max(r.nvars(), b.nvars()), v);
  while (!r.is_zero() && r.degree_in(v) >= db) {
    int dr = r.degree_in(v);
    Poly lr = lead_in(r, v);
    r = lb * r - lr * x.pow(dr - db) * b;
  }
  return r;
}

/// Dense univariate polynomial over Q, coefficient i multiplies t^i.
using UniPoly = std::vector<Rational>;

inline void trim(UniPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    while (a.size() >= b.size()) {
      const Rational f = a.back() / b.back();
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

/// Specializes every variable except v; nullopt if the leading coefficient in v vanishes.
inline std::optional<UniPoly> specialize(const Poly& p, int v, const std::vector<Rational>& point) {
  auto cs = p.coefficients_in(v);
  UniPoly out(static_cast<std::size_t>(cs.rbegin()->first + 1), Rational(0));
  for (const auto& [e, c] : cs) out[static_cast<std::size_t>(e)] = c.evaluate(point);
  if (out.back() == 0) return std::nullopt;
  return out;
}

/// Proves gcd(ps) = 1 when it returns true: a common factor of positive degree in v
/// would survive specialization of the other variables at a point where the leading
/// coefficient in v of the first polynomial is nonzero.
inline bool gcd_is_trivial_certificate(const std::vector<const Poly*>& ps) {
  if (ps.empty()) return false;
  const int nv = ps.front()->nvars();
  for (int v = 0; v < nv; ++v) {
    bool all_use = true;
    for (const Poly* p : ps) all_use = all_use && p->uses(v);
    if (!all_use) continue;
    bool proved = false;
    for (int attempt = 0; attempt < 3 && !proved; ++attempt) {
      std::vector<Rational> point(static_cast<std::size_t>(nv));
      for (int k = 0; k < nv; ++k) point[static_cast<std::size_t>(k)] = Rational((k * 7 + attempt * 13 + 3) % 29 - 14, 1 + (k + attempt) % 5);
      auto g = specialize(*ps.front(), v, point);
      if (!g) continue;
      for (std::size_t i = 1; i < ps.size() && g->size() > 1; ++i) {
        UniPoly s(1, Rational(0));
        auto cs = ps[i]->coefficients_in(v);
        s.assign(static_cast<std::size_t>(cs.rbegin()->first + 1), Rational(0));
        for (const auto& [e, c] : cs) s[static_cast<std::size_t>(e)] = c.evaluate(point);
        g = uni_gcd(*g, s);
      }
      if (g->size() <= 1) proved = true;
      else break;  // likely a genuine common factor in v
    }
    if (!proved) return false;
  }
  return true;
}

/// Integer multiple of p with coprime integer coefficients.
inline Poly integral_primitive(const Poly& p) {
  BigInt den = 1, num = 0;
  for (const auto& [m, c] : p.terms()) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c));
  for (const auto& [m, c] : p.terms()) num = boost::multiprecision::gcd(num, boost::multiprecision::numerator(c) * (den / boost::multiprecision::denominator(c)));
  if (num == 0) return p;
  return p * Rational(den, num);
}

inline BigInt max_norm(const Poly& p) {
  BigInt m = 0;
  for (const auto& [e, c] : p.terms()) m = std::max(m, BigInt(abs(boost::multiprecision::numerator(c))));
  return m;
}

inline BigInt integer_content(const Poly& p) {
  BigInt g = 0;
  for (const auto& [e, c] : p.terms()) g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(c));
  return g;
}

/// Heuristic gcd of integer polynomials by evaluation at a large integer and
/// xi-adic reconstruction. With xi > 2 min(|A|, |B|) + 2, a reconstructed primitive
/// candidate dividing both inputs is the gcd (Char-Geddes-Gonnet), so a returned
/// polynomial is exact; nullopt means the heuristic gave up.
inline std::optional<Poly> heuristic_gcd(const Poly& A0, const Poly& B0, unsigned bit_limit) {
  const int nv = std::max(A0.nvars(), B0.nvars());
  const BigInt ca = integer_content(A0), cb = integer_content(B0);
  const BigInt c = boost::multiprecision::gcd(ca, cb);
  const Poly A = A0 * Rational(1, ca), B = B0 * Rational(1, cb);
  const int v = main_variable(A, B);
  if (v < 0) return Poly::constant(nv, Rational(c));
  BigInt xi = 2 * std::min(max_norm(A), max_norm(B)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt, xi = xi * 73794 / 27011) {
    if (boost::multiprecision::msb(xi) > bit_limit) return std::nullopt;
    const Poly at = Poly::constant(nv, Rational(xi));
    auto g = heuristic_gcd(A.substitute(v, at), B.substitute(v, at), bit_limit);
    if (!g) continue;
    // gamma = sum_i G_i xi^i with symmetric residues G_i
    Poly G(nv), gamma = *g;
    const Poly x = Poly::variable(nv, v);
    for (int i = 0; !gamma.is_zero(); ++i) {
      Poly digit(nv);
      for (const auto& [m, cf] : gamma.terms()) {
        BigInt r = boost::multiprecision::numerator(cf) % xi;
        if (r < 0) r += xi;
        if (2 * r > xi) r -= xi;
        if (r != 0) digit.add_term(m, Rational(r));
      }
      G += digit * x.pow(i);
      gamma = (gamma - digit) * Rational(1, xi);
    }
    if (G.is_zero()) continue;
    G = G * Rational(1, integer_content(G));
    if (try_divide(A, G) && try_divide(B, G)) return G * Rational(c);
  }
  return std::nullopt;
}

}  // namespace detail

/// Monic gcd in Q[vars]: evaluation heuristic first, then recursive content and
/// primitive remainder sequences.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
  const int nv = std::max(a.nvars(), b.nvars());
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly::constant(nv, 1);
  if (a.nvars() == b.nvars() && detail::gcd_is_trivial_certificate({&a, &b})) return Poly::constant(nv, 1);
  if (auto g = detail::heuristic_gcd(detail::integral_primitive(a), detail::integral_primitive(b), 1u << 18))
    return g->monic();
  const int v = detail::main_variable(a, b);
  if (!a.uses(v)) return poly_gcd(a, detail::content_in(b, v));
  if (!b.uses(v)) return poly_gcd(detail::content_in(a, v), b);
  const Poly ca = detail::content_in(a, v), cb = detail::content_in(b, v);
  const Poly c = poly_gcd(ca, cb);
  Poly p = exact_divide(a, ca), q = exact_divide(b, cb);
  if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
  Poly g(nv);
  for (;;) {
    Poly r = detail::pseudo_remainder(p, q, v);
    if (r.is_zero()) {
      g = q;
      break;
    }
    if (!r.uses(v)) {
      g = Poly::constant(nv, 1);
      break;
    }
    p = q;
    q = detail::primitive_part_in(r, v);
  }
  if (!g.is_constant()) g = detail::primitive_part_in(g, v);
  return (c * g).monic();
}

inline Poly poly_gcd(const std::vector<Poly>& ps) {
  std::vector<const Poly*> nonzero;
  for (const auto& p : ps)
    if (!p.is_zero()) nonzero.push_back(&p);
  bool same_ring = true;
  for (const Poly* p : nonzero) same_ring = same_ring && p->nvars() == nonzero.front()->nvars();
  if (nonzero.size() > 1 && same_ring && detail::gcd_is_trivial_certificate(nonzero))
    return Poly::constant(nonzero.front()->nvars(), 1);
  Poly g;
  bool any = false;
  for (const auto& p : ps) {
    if (p.is_zero()) continue;
    g = any ? poly_gcd(g, p) : p.monic();
    any = true;
    if (g.is_constant()) break;
  }
  return g;
}

}  // namespace adjfol
