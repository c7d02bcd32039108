#pragma once

// Codimension-one foliations on X = {sum x_i y_i = 0} in P^n x P^n.
//
// Variables: x_0..x_n are 0..n, y_0..y_n are n+1..2n+1. A k-form on the cone
// C^{n+1} x C^{n+1} whose contractions with both Euler fields vanish descends to
// P^n x P^n; all statements about X are tested modulo the quadric q.
// The bidegree of a form counts each dx as degree (1,0) and each dy as (0,1),
// so a 1-form of bidegree (a,b) is a section of Omega^1 (a,b).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "adjfol/forms.hpp"
#include "adjfol/linsolve.hpp"
#include "adjfol/poly.hpp"
#include "adjfol/rational.hpp"

namespace adjfol {

struct Bidegree {
  int a = 0, b = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
  std::string str() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

inline int fol_nvars(int n) { return 2 * (n + 1); }
inline int xvar(int i) { return i; }
inline int yvar(int n, int j) { return n + 1 + j; }
inline int fol_n(int nvars) {
  if (nvars < 4 || nvars % 2 != 0 || nvars > kMaxVars) throw InvalidArgument("not a P^n x P^n coordinate ring");
  return nvars / 2 - 1;
}

inline std::vector<std::string> fol_names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i <= n; ++i) out.push_back("x" + std::to_string(i));
  for (int i = 0; i <= n; ++i) out.push_back("y" + std::to_string(i));
  return out;
}

inline Poly xv(int n, int i) { return Poly::variable(fol_nvars(n), xvar(i)); }
inline Poly yv(int n, int j) { return Poly::variable(fol_nvars(n), yvar(n, j)); }

/// q = sum x_i y_i.
inline Poly quadric(int n) {
  Poly q(fol_nvars(n));
  for (int i = 0; i <= n; ++i) q += xv(n, i) * yv(n, i);
  return q;
}

inline Bidegree monomial_bidegree(const Monomial& m, int n) {
  Bidegree d;
  for (int i = 0; i <= n; ++i) {
    d.a += m[static_cast<std::size_t>(xvar(i))];
    d.b += m[static_cast<std::size_t>(yvar(n, i))];
  }
  return d;
}

/// Bidegree of a nonzero bihomogeneous polynomial, nullopt otherwise.
inline std::optional<Bidegree> bidegree(const Poly& p, int n) {
  if (p.is_zero()) return std::nullopt;
  std::optional<Bidegree> d;
  for (const auto& [m, c] : p.terms()) {
    Bidegree e = monomial_bidegree(m, n);
    if (d && *d != e) return std::nullopt;
    d = e;
  }
  return d;
}

inline Bidegree require_bidegree(const Poly& p, int n, const std::string& what) {
  auto d = bidegree(p, n);
  if (!d) throw InvalidArgument(what + " is zero or not bihomogeneous");
  return *d;
}

inline std::vector<Monomial> monomials_of_bidegree(int n, Bidegree d) {
  std::vector<Monomial> out;
  if (d.a < 0 || d.b < 0) return out;
  std::vector<std::vector<int>> xs, ys;
  std::function<void(int, int, std::vector<int>&, std::vector<std::vector<int>>&)> rec =
      [&](int pos, int left, std::vector<int>& cur, std::vector<std::vector<int>>& acc) {
        if (pos == n) {
          cur[static_cast<std::size_t>(pos)] = left;
          acc.push_back(cur);
          return;
        }
        for (int e = left; e >= 0; --e) {
          cur[static_cast<std::size_t>(pos)] = e;
          rec(pos + 1, left - e, cur, acc);
        }
      };
  std::vector<int> cur(static_cast<std::size_t>(n + 1));
  rec(0, d.a, cur, xs);
  rec(0, d.b, cur, ys);
  for (const auto& ex : xs)
    for (const auto& ey : ys) {
      Monomial m{};
      for (int i = 0; i <= n; ++i) {
        m[static_cast<std::size_t>(xvar(i))] = static_cast<std::uint8_t>(ex[static_cast<std::size_t>(i)]);
        m[static_cast<std::size_t>(yvar(n, i))] = static_cast<std::uint8_t>(ey[static_cast<std::size_t>(i)]);
      }
      out.push_back(m);
    }
  return out;
}

/// Normal form modulo q: every x0*y0 is rewritten as -sum_{i>=1} x_i y_i.
inline Poly reduce_mod_q(const Poly& p, int n) {
  const auto X0 = static_cast<std::size_t>(xvar(0)), Y0 = static_cast<std::size_t>(yvar(n, 0));
  Poly done(p.nvars());
  Poly work = p;
  while (!work.is_zero()) {
    Poly next(p.nvars());
    for (const auto& [m, c] : work.terms()) {
      if (m[X0] == 0 || m[Y0] == 0) {
        done.add_term(m, c);
        continue;
      }
      Monomial base = m;
      base[X0] -= 1;
      base[Y0] -= 1;
      for (int i = 1; i <= n; ++i) {
        Monomial t = base;
        t[static_cast<std::size_t>(xvar(i))] += 1;
        t[static_cast<std::size_t>(yvar(n, i))] += 1;
        next.add_term(t, -c);
      }
    }
    work = std::move(next);
  }
  return done;
}

inline Form reduce_mod_q(const Form& w, int n) {
  return w.map_coefficients([n](const Poly& p) { return reduce_mod_q(p, n); });
}

inline VectorField euler_x(int n) {
  VectorField e(static_cast<std::size_t>(fol_nvars(n)), Poly(fol_nvars(n)));
  for (int i = 0; i <= n; ++i) e[static_cast<std::size_t>(xvar(i))] = xv(n, i);
  return e;
}
inline VectorField euler_y(int n) {
  VectorField e(static_cast<std::size_t>(fol_nvars(n)), Poly(fol_nvars(n)));
  for (int i = 0; i <= n; ++i) e[static_cast<std::size_t>(yvar(n, i))] = yv(n, i);
  return e;
}

/// Both Euler contractions vanish identically (the form descends to P^n x P^n).
inline bool euler_contractions_vanish(const Form& w) {
  const int n = fol_n(w.nvars());
  return w.contract(euler_x(n)).is_zero() && w.contract(euler_y(n)).is_zero();
}

/// Bidegree of a nonzero bihomogeneous form, nullopt otherwise.
inline std::optional<Bidegree> form_bidegree(const Form& w) {
  const int n = fol_n(w.nvars());
  std::optional<Bidegree> d;
  for (const auto& [mask, p] : w.coefficients()) {
    auto pd = bidegree(p, n);
    if (!pd) return std::nullopt;
    int dx = 0, dy = 0;
    for (int i = 0; i <= n; ++i) {
      dx += (mask >> xvar(i)) & 1;
      dy += (mask >> yvar(n, i)) & 1;
    }
    Bidegree e{pd->a + dx, pd->b + dy};
    if (d && *d != e) return std::nullopt;
    d = e;
  }
  return d;
}

namespace detail {

inline void check_one_form(const Form& w) {
  if (w.degree() != 1) throw InvalidArgument("expected a 1-form");
  fol_n(w.nvars());
}

}  // namespace detail

/// h1 dh2 - h2 dh1 for two independent sections of O(1,1).
inline Form pencil_form(const Poly& h1, const Poly& h2) {
  const int n = fol_n(std::max(h1.nvars(), h2.nvars()));
  if (require_bidegree(h1, n, "h1") != Bidegree{1, 1} || require_bidegree(h2, n, "h2") != Bidegree{1, 1})
    throw InvalidArgument("pencil members must have bidegree (1,1)");
  Form w = h1 * Form::exact(h2) - h2 * Form::exact(h1);
  if (w.is_zero()) throw InvalidArgument("degenerate pencil: h1 and h2 are linearly dependent");
  return w;
}

/// (prod f_i) * sum lambda_i df_i / f_i, requiring sum lambda_i bideg(f_i) = (0,0).
inline Form log_form(const std::vector<Rational>& residues, const std::vector<Poly>& factors) {
  if (residues.size() != factors.size() || factors.size() < 2)
    throw InvalidArgument("log_form needs at least two factors and one residue per factor");
  const int nv = factors.front().nvars();
  const int n = fol_n(nv);
  Rational sa = 0, sb = 0;
  std::vector<Bidegree> degs;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].nvars() != nv) throw InvalidArgument("factors live in different rings");
    Bidegree d = require_bidegree(factors[i], n, "factor " + std::to_string(i + 1));
    if (d == Bidegree{0, 0}) throw InvalidArgument("factor " + std::to_string(i + 1) + " is constant");
    degs.push_back(d);
    sa += residues[i] * d.a;
    sb += residues[i] * d.b;
  }
  if (sa != 0 || sb != 0)
    throw InvalidArgument("residue condition violated: sum lambda_i * bidegree_i = (" + to_string(sa) + "," +
                          to_string(sb) + ")");
  Form w(nv, 1);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    Poly others = Poly::constant(nv, residues[i]);
    for (std::size_t j = 0; j < factors.size(); ++j)
      if (j != i) others *= factors[j];
    w += others * Form::exact(factors[i]);
  }
  if (w.is_zero()) throw InvalidArgument("logarithmic form is identically zero");
  return w;
}

/// omega ^ d omega vanishes on X: either identically, or (omega ^ d omega) ^ dq = 0 mod q.
inline bool integrable(const Form& w) {
  detail::check_one_form(w);
  const int n = fol_n(w.nvars());
  Form theta = wedge(w, w.d());
  if (theta.is_zero()) return true;
  return reduce_mod_q(wedge(theta, Form::exact(quadric(n))), n).is_zero();
}

namespace detail {

/// Row-echelon span of vectors indexed by monomials; used for membership in (F, q).
class MonomialSpan {
 public:
  void add(Poly v) {
    v = reduce(std::move(v));
    if (v.is_zero()) return;
    v = v.monic();
    rows_.emplace(v.leading().first, std::move(v));
  }
  Poly reduce(Poly v) const {
    while (!v.is_zero()) {
      bool changed = false;
      for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
        auto r = rows_.find(it->first);
        if (r == rows_.end()) continue;
        Rational c = it->second;
        v -= r->second * c;
        changed = true;
        break;
      }
      if (!changed) break;
    }
    return v;
  }

 private:
  std::map<Monomial, Poly> rows_;
};

}  // namespace detail

/// Membership of bihomogeneous polynomials in the ideal (F, q).
class IdealModQ {
 public:
  IdealModQ(const Poly& F, int n) : F_(F), n_(n), dF_(require_bidegree(F, n, "F")) {}

  bool contains(const Poly& g) {
    if (g.is_zero()) return true;
    Poly r = reduce_mod_q(g, n_);
    if (r.is_zero()) return true;
    auto d = bidegree(g, n_);
    if (!d) throw InvalidArgument("ideal membership needs a bihomogeneous polynomial");
    return span(*d).reduce(r).is_zero();
  }

 private:
  const detail::MonomialSpan& span(Bidegree d) {
    auto it = spans_.find(d);
    if (it != spans_.end()) return it->second;
    detail::MonomialSpan s;
    for (const auto& m : monomials_of_bidegree(n_, Bidegree{d.a - dF_.a, d.b - dF_.b}))
      s.add(reduce_mod_q(Poly::monomial(F_.nvars(), m, 1) * F_, n_));
    return spans_.emplace(d, std::move(s)).first->second;
  }

  Poly F_;
  int n_;
  Bidegree dF_;
  std::map<Bidegree, detail::MonomialSpan> spans_;
};

/// {F = 0} cap X is invariant: omega ^ dF ^ dq lies in (F, q) coefficientwise.
inline bool is_invariant(const Form& w, const Poly& F) {
  detail::check_one_form(w);
  const int n = fol_n(w.nvars());
  if (F.is_zero()) throw InvalidArgument("invariant hypersurface equation must be nonzero");
  Form test = wedge(wedge(w, Form::exact(F)), Form::exact(quadric(n)));
  IdealModQ ideal(F, n);
  for (const auto& [mask, g] : test.coefficients())
    if (!ideal.contains(g)) return false;
  return true;
}

/// Affine chart U_ij of X: x_i = 1, y_j = 1, y_i solved from q. Local coordinates are
/// x_k (k != i) followed by y_l (l != i, j).
struct Chart {
  int i = 0, j = 1;
};

inline int chart_nvars(int n) { return 2 * n - 1; }

inline std::vector<Poly> chart_embedding(int n, Chart c) {
  if (c.i == c.j || c.i < 0 || c.j < 0 || c.i > n || c.j > n) throw InvalidArgument("chart needs i != j in 0..n");
  const int L = chart_nvars(n);
  std::vector<Poly> img(static_cast<std::size_t>(fol_nvars(n)), Poly(L));
  int next = 0;
  for (int k = 0; k <= n; ++k)
    img[static_cast<std::size_t>(xvar(k))] = k == c.i ? Poly::constant(L, 1) : Poly::variable(L, next++);
  for (int l = 0; l <= n; ++l) {
    if (l == c.i) continue;
    img[static_cast<std::size_t>(yvar(n, l))] = l == c.j ? Poly::constant(L, 1) : Poly::variable(L, next++);
  }
  Poly yi(L);
  for (int k = 0; k <= n; ++k)
    if (k != c.i) yi -= img[static_cast<std::size_t>(xvar(k))] * img[static_cast<std::size_t>(yvar(n, k))];
  img[static_cast<std::size_t>(yvar(n, c.i))] = yi;
  return img;
}

inline Form chart_pullback(const Form& w, Chart c) { return w.pullback(chart_embedding(fol_n(w.nvars()), c)); }

/// The zero set of omega on X contains a divisor.
inline bool has_divisorial_singularities(const Form& w) {
  detail::check_one_form(w);
  if (w.is_zero()) return true;
  std::vector<Poly> coeffs;
  for (const auto& [m, p] : w.coefficients()) coeffs.push_back(p);
  if (!poly_gcd(coeffs).is_constant()) return true;
  // A divisor of X missing U_01 lies in {x0 = 0} or {y1 = 0}, and those meet U_10.
  for (Chart c : {Chart{0, 1}, Chart{1, 0}}) {
    Form local = chart_pullback(w, c);
    if (local.is_zero()) return true;
    std::vector<Poly> lc;
    for (const auto& [m, p] : local.coefficients()) lc.push_back(p);
    if (!poly_gcd(lc).is_constant()) return true;
  }
  return false;
}

/// A line of X in a fiber of pi_1 (family 1: x fixed, y moves) or of pi_2 (family 2).
struct LineInFamily {
  int family = 1;
  std::vector<Rational> base;  // the fixed point
  std::vector<Rational> u, w;  // spanning the moving line inside base^perp
};

namespace detail {

inline Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool independent(const std::vector<Rational>& u, const std::vector<Rational>& w) {
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (u[i] * w[j] - u[j] * w[i] != 0) return true;
  return false;
}

}  // namespace detail

inline void validate_line(const LineInFamily& l, int n) {
  const auto len = static_cast<std::size_t>(n + 1);
  if (l.family != 1 && l.family != 2) throw InvalidArgument("line family must be 1 or 2");
  if (l.base.size() != len || l.u.size() != len || l.w.size() != len)
    throw InvalidArgument("line data must have n+1 coordinates");
  if (std::all_of(l.base.begin(), l.base.end(), [](const Rational& r) { return r == 0; }))
    throw InvalidArgument("base point of a line must be nonzero");
  if (!detail::independent(l.u, l.w)) throw InvalidArgument("non-reduced parametrization: direction points are dependent");
  if (detail::dot(l.base, l.u) != 0 || detail::dot(l.base, l.w) != 0)
    throw InvalidArgument("line is not contained in X: direction points are not orthogonal to the base point");
}

/// Homogeneous parametrization (s:t) -> point of the line, as images of the 2(n+1) variables.
inline std::vector<Poly> line_parametrization(const LineInFamily& l, int n) {
  validate_line(l, n);
  const Poly s = Poly::variable(2, 0), t = Poly::variable(2, 1);
  std::vector<Poly> img(static_cast<std::size_t>(fol_nvars(n)), Poly(2));
  for (int i = 0; i <= n; ++i) {
    Poly fixed = Poly::constant(2, l.base[static_cast<std::size_t>(i)]);
    Poly moving = l.u[static_cast<std::size_t>(i)] * s + l.w[static_cast<std::size_t>(i)] * t;
    img[static_cast<std::size_t>(xvar(i))] = l.family == 1 ? fixed : moving;
    img[static_cast<std::size_t>(yvar(n, i))] = l.family == 1 ? moving : fixed;
  }
  return img;
}

/// Degree of a foliation along a curve: an integer or minus infinity (curve is a leaf).
struct TangencyDegree {
  bool minus_infinity = false;
  int value = 0;
  static TangencyDegree minus_inf() { return {true, 0}; }
  static TangencyDegree finite(int v) { return {false, v}; }
  friend bool operator==(const TangencyDegree&, const TangencyDegree&) = default;
  std::string str() const { return minus_infinity ? "-inf" : std::to_string(value); }
};

/// Pulls omega back to the line: b(s,t) (s dt - t ds); returns deg b.
inline TangencyDegree tangency_degree(const Form& w, const LineInFamily& l) {
  detail::check_one_form(w);
  const int n = fol_n(w.nvars());
  Form pb = w.pullback(line_parametrization(l, n));
  if (pb.is_zero()) return TangencyDegree::minus_inf();
  const Poly A = pb.coeff1(0), B = pb.coeff1(1);  // A ds + B dt
  const Poly s = Poly::variable(2, 0), t = Poly::variable(2, 1);
  auto b = try_divide(B, s);
  if (!b || !(A + t * *b).is_zero()) detail::fail_consistency("pullback to a line is not a multiple of s dt - t ds");
  int deg = -1;
  for (const auto& [m, c] : b->terms()) {
    int d = monomial_degree(m);
    if (deg >= 0 && d != deg) detail::fail_consistency("pullback coefficient is not homogeneous");
    deg = d;
  }
  return TangencyDegree::finite(deg);
}

inline std::vector<Rational> random_point(std::mt19937_64& rng, int len, int height) {
  for (;;) {
    std::vector<Rational> p;
    for (int i = 0; i < len; ++i) p.push_back(random_rational(rng, height));
    if (std::any_of(p.begin(), p.end(), [](const Rational& r) { return r != 0; })) return p;
  }
}

/// Random line of the given family with rational data of bounded height.
inline LineInFamily random_line(int family, int n, std::mt19937_64& rng, int height = 100) {
  LineInFamily l;
  l.family = family;
  l.base = random_point(rng, n + 1, height);
  std::size_t k = 0;
  while (l.base[k] == 0) ++k;
  auto project = [&](std::vector<Rational> r) {
    Rational c = detail::dot(l.base, r) / l.base[k];
    r[k] -= c;
    return r;
  };
  do {
    l.u = project(random_point(rng, n + 1, height));
    l.w = project(random_point(rng, n + 1, height));
  } while (!detail::independent(l.u, l.w));
  return l;
}

/// splitmix64 step; derives independent per-trial seeds from one master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Tangency degrees against `samples` seeded random lines of one family.
inline std::vector<TangencyDegree> sample_degrees(const Form& w, int family, int samples, std::uint64_t seed,
                                                  int height = 100) {
  const int n = fol_n(w.nvars());
  std::vector<TangencyDegree> out;
  for (int k = 0; k < samples; ++k) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(family) * 1000003u + static_cast<std::uint64_t>(k)));
    out.push_back(tangency_degree(w, random_line(family, n, rng, height)));
  }
  return out;
}

/// Random bihomogeneous polynomial with every monomial present generically.
inline Poly random_bihomogeneous(int n, Bidegree d, std::mt19937_64& rng, int height = 100) {
  Poly p(fol_nvars(n));
  for (const auto& m : monomials_of_bidegree(n, d)) p.add_term(m, random_rational(rng, height));
  if (p.is_zero()) p.add_term(monomials_of_bidegree(n, d).front(), 1);
  return p;
}

/// Random 1-form of the given bidegree (not necessarily descending or integrable).
inline Form random_one_form(int n, Bidegree d, std::mt19937_64& rng, int height = 100) {
  Form w(fol_nvars(n), 1);
  for (int i = 0; i <= n; ++i) {
    if (d.a >= 1) w.add(Form::Mask{1} << xvar(i), random_bihomogeneous(n, {d.a - 1, d.b}, rng, height));
    if (d.b >= 1) w.add(Form::Mask{1} << yvar(n, i), random_bihomogeneous(n, {d.a, d.b - 1}, rng, height));
  }
  return w;
}

// ---------------------------------------------------------------------------
// Vector fields and foliations spanned by two of them (n = 2, X a threefold).

/// Field induced by A in gl(n+1) acting on x by A and on y by the inverse transpose,
/// which preserves q: V = sum (Ax)_i d/dx_i - sum (A^T y)_j d/dy_j.
inline VectorField linear_action_field(const std::vector<std::vector<Rational>>& A) {
  const int n = static_cast<int>(A.size()) - 1;
  if (n < 1) throw InvalidArgument("matrix must be at least 2x2");
  for (const auto& row : A)
    if (row.size() != A.size()) throw InvalidArgument("matrix must be square");
  const int nv = fol_nvars(n);
  VectorField V(static_cast<std::size_t>(nv), Poly(nv));
  for (int i = 0; i <= n; ++i)
    for (int k = 0; k <= n; ++k) {
      const Rational& a = A[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      if (a == 0) continue;
      V[static_cast<std::size_t>(xvar(i))] += a * xv(n, k);
      V[static_cast<std::size_t>(yvar(n, k))] -= a * yv(n, i);
    }
  return V;
}

inline Poly apply_field(const VectorField& V, const Poly& f) {
  Poly out(f.nvars());
  for (std::size_t v = 0; v < V.size(); ++v)
    if (!V[v].is_zero()) out += V[v] * f.derivative(static_cast<int>(v));
  return out;
}

inline VectorField lie_bracket(const VectorField& V, const VectorField& W) {
  VectorField out(V.size(), Poly(V.empty() ? 0 : V.front().nvars()));
  for (std::size_t k = 0; k < V.size(); ++k) out[k] = apply_field(V, W[k]) - apply_field(W, V[k]);
  return out;
}

inline bool tangent_to_X(const VectorField& V) {
  const int n = fol_n(static_cast<int>(V.size()));
  return reduce_mod_q(apply_field(V, quadric(n)), n).is_zero();
}

/// Chart coordinates of a field on X (see Chart).
inline VectorField chart_field(const VectorField& V, int n, Chart c) {
  const auto img = chart_embedding(n, c);
  VectorField out;
  auto at = [&](int var) { return V[static_cast<std::size_t>(var)].compose(img); };
  const Poly Vxi = at(xvar(c.i)), Vyj = at(yvar(n, c.j));
  for (int k = 0; k <= n; ++k)
    if (k != c.i) out.push_back(at(xvar(k)) - img[static_cast<std::size_t>(xvar(k))] * Vxi);
  for (int l = 0; l <= n; ++l)
    if (l != c.i && l != c.j) out.push_back(at(yvar(n, l)) - img[static_cast<std::size_t>(yvar(n, l))] * Vyj);
  return out;
}

struct FieldFoliation {
  Form omega;
  Bidegree bidegree;
  Form local;  // saturated contraction in the chart
};

/// The codimension-one foliation spanned by two fields tangent to X (n = 2):
/// contracts the chart volume form by v1 then v2, saturates, and finds the ambient
/// form of least bidegree whose chart pullback equals it.
inline FieldFoliation foliation_from_fields(const VectorField& v1, const VectorField& v2, Chart chart = {},
                                            int max_total_degree = 8) {
  const int n = fol_n(static_cast<int>(v1.size()));
  if (n != 2) throw InvalidArgument("foliation_from_fields needs n = 2");
  if (v2.size() != v1.size()) throw InvalidArgument("fields live on different spaces");
  if (!tangent_to_X(v1) || !tangent_to_X(v2)) throw InvalidArgument("vector field is not tangent to X");
  const int L = chart_nvars(n);
  const VectorField l1 = chart_field(v1, n, chart), l2 = chart_field(v2, n, chart);
  Form vol(L, L);
  vol.add((Form::Mask{1} << L) - 1, Poly::constant(L, 1));
  Form local = vol.contract(l1).contract(l2);
  if (local.is_zero()) throw InvalidArgument("vector fields are dependent on X");
  std::vector<Poly> cs;
  for (const auto& [m, p] : local.coefficients()) cs.push_back(p);
  const Poly g = poly_gcd(cs);
  local = local.map_coefficients([&](const Poly& p) { return exact_divide(p, g); });

  const auto img = chart_embedding(n, chart);
  std::vector<Form> dimg;
  for (const auto& f : img) dimg.push_back(Form::exact(f));
  const int nv = fol_nvars(n);

  for (int total = 1; total <= max_total_degree; ++total)
    for (int a = 0; a <= total; ++a) {
      const int b = total - a;
      struct Unknown {
        int var;
        Monomial mono;
      };
      std::vector<Unknown> unk;
      for (int i = 0; i <= n; ++i) {
        for (const auto& m : monomials_of_bidegree(n, {a - 1, b})) unk.push_back({xvar(i), m});
        for (const auto& m : monomials_of_bidegree(n, {a, b - 1})) unk.push_back({yvar(n, i), m});
      }
      if (unk.empty()) continue;
      LinearSystem sys(static_cast<int>(unk.size()));
      // Euler conditions, one equation per monomial of bidegree (a, b).
      std::map<Monomial, LinearSystem::Row> ex, ey;
      // Chart conditions, keyed by (local differential, local monomial).
      std::map<std::pair<Form::Mask, Monomial>, LinearSystem::Row> loc;
      for (std::size_t k = 0; k < unk.size(); ++k) {
        const auto& u = unk[k];
        Monomial e = u.mono;
        e[static_cast<std::size_t>(u.var)] += 1;
        (u.var <= n ? ex : ey)[e][static_cast<int>(k)] += 1;
        Form contrib = Poly::monomial(nv, u.mono, 1).compose(img) * dimg[static_cast<std::size_t>(u.var)];
        for (const auto& [mask, p] : contrib.coefficients())
          for (const auto& [mm, c] : p.terms()) loc[{mask, mm}][static_cast<int>(k)] += c;
      }
      for (auto& [m, row] : ex) sys.add_equation(row, 0);
      for (auto& [m, row] : ey) sys.add_equation(row, 0);
      std::map<std::pair<Form::Mask, Monomial>, Rational> target;
      for (const auto& [mask, p] : local.coefficients())
        for (const auto& [mm, c] : p.terms()) target[{mask, mm}] = c;
      for (const auto& [key, c] : target) loc.try_emplace(key);
      for (auto& [key, row] : loc) {
        auto t = target.find(key);
        sys.add_equation(row, t == target.end() ? Rational(0) : t->second);
        if (sys.inconsistent()) break;
      }
      auto sol = sys.solve();
      if (!sol) continue;
      Form w(nv, 1);
      for (std::size_t k = 0; k < unk.size(); ++k)
        if ((*sol)[k] != 0) w.add(Form::Mask{1} << unk[k].var, Poly::monomial(nv, unk[k].mono, (*sol)[k]));
      if (w.is_zero()) continue;
      return FieldFoliation{w, Bidegree{a, b}, local};
    }
  throw InvalidArgument("no ambient form of total degree <= " + std::to_string(max_total_degree) +
                        " matches the fields");
}

/// Generators of aff(C) inside sl(3) from the second Veronese action of the
/// Borel subgroup of SL(2): x = diag(1,0,-1), y with y e1 = 0, y e2 = 2 e1, y e3 = e2.
enum class AffLabeling {
  XY,     // [x, y] = y
  E1E2,   // [e1, e2] = e1 with e1 = y, e2 = -x
};

struct AffPair {
  VectorField first, second;
  std::vector<std::vector<Rational>> first_matrix, second_matrix;
  AffLabeling labeling;
  std::string relation;
};

inline AffPair aff_pair(AffLabeling labeling = AffLabeling::XY) {
  using M = std::vector<std::vector<Rational>>;
  const M x{{1, 0, 0}, {0, 0, 0}, {0, 0, -1}};
  const M y{{0, 2, 0}, {0, 0, 1}, {0, 0, 0}};
  const M minus_x{{-1, 0, 0}, {0, 0, 0}, {0, 0, 1}};
  AffPair p;
  p.labeling = labeling;
  if (labeling == AffLabeling::XY) {
    p.first_matrix = x;
    p.second_matrix = y;
    p.relation = "[x,y] = y";
  } else {
    p.first_matrix = y;
    p.second_matrix = minus_x;
    p.relation = "[e1,e2] = e1";
  }
  p.first = linear_action_field(p.first_matrix);
  p.second = linear_action_field(p.second_matrix);
  return p;
}

/// The matrix commutator relation carried by the pair holds for the fields
/// (the action is a Lie algebra homomorphism up to the sign of the bracket).
inline bool aff_relation_holds(const AffPair& p) {
  const VectorField br = lie_bracket(p.first, p.second);
  // A -> V_A is an anti-homomorphism: [V_A, V_B] = -V_[A,B]. [A,B] is the pair's
  // prescribed element (second for XY, first for E1E2).
  const VectorField& expect = p.labeling == AffLabeling::XY ? p.second : p.first;
  for (std::size_t k = 0; k < br.size(); ++k)
    if (!(br[k] + expect[k]).is_zero()) return false;
  return true;
}

/// Invariant surfaces of the affine-action foliation: conics nu_2(P^1) in either factor.
inline Poly aff_surface_h1(int n = 2) { return xv(n, 1) * xv(n, 1) - xv(n, 0) * xv(n, 2); }
inline Poly aff_surface_h2(int n = 2) { return yv(n, 1) * yv(n, 1) - Rational(4) * yv(n, 0) * yv(n, 2); }

/// Fields of the two-dimensional torus diag(1, t1, t2) acting on X (n = 2).
inline std::pair<VectorField, VectorField> torus_pair() {
  using M = std::vector<std::vector<Rational>>;
  return {linear_action_field(M{{0, 0, 0}, {0, 1, 0}, {0, 0, 0}}),
          linear_action_field(M{{0, 0, 0}, {0, 0, 0}, {0, 0, 1}})};
}

/// Two 1-forms define the same foliation on X.
inline bool proportional_on_X(const Form& a, const Form& b) {
  detail::check_one_form(a);
  const int n = fol_n(a.nvars());
  return reduce_mod_q(wedge(wedge(a, b), Form::exact(quadric(n))), n).is_zero();
}

struct FoliationNumerics {
  Bidegree normal_bidegree;
  Bidegree K_F_bidegree;  // K_X + N with K_X = O(-n,-n)
  int deg_H1 = 0;         // b - 2
  int deg_H2 = 0;         // a - 2
  int splitting_p = 0;    // p in f^*T_F = O(1)^p + O^(dim X - 1 - p) for a degree-0 family
  int c1_TF_H1 = 0;       // deg f^*T_F along a family-1 line
  int c1_TF_H2 = 0;
};

inline FoliationNumerics foliation_numerics(Bidegree normal, int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  FoliationNumerics f;
  f.normal_bidegree = normal;
  f.K_F_bidegree = {normal.a - n, normal.b - n};
  f.deg_H1 = normal.b - 2;
  f.deg_H2 = normal.a - 2;
  f.splitting_p = n - 2;
  f.c1_TF_H1 = n - normal.b;
  f.c1_TF_H2 = n - normal.a;
  return f;
}

// ---------------------------------------------------------------------------
// Named example foliations.

inline Poly random_linear_x(int n, std::mt19937_64& rng, int height) { return random_bihomogeneous(n, {1, 0}, rng, height); }
inline Poly random_linear_y(int n, std::mt19937_64& rng, int height) { return random_bihomogeneous(n, {0, 1}, rng, height); }

/// Pencil of two random sections of O_X(1) = O(1,1).
inline Form builtin_pencil(int n, std::mt19937_64& rng, int height = 100) {
  return pencil_form(random_bihomogeneous(n, {1, 1}, rng, height), random_bihomogeneous(n, {1, 1}, rng, height));
}

/// Logarithmic form with residues (l, -l, m, -m) along two (1,0) and two (0,1) divisors.
inline Form builtin_log4(int n, std::mt19937_64& rng, int height = 100) {
  Rational l = random_nonzero_rational(rng, height), m = random_nonzero_rational(rng, height);
  return log_form({l, -l, m, -m}, {random_linear_x(n, rng, height), random_linear_x(n, rng, height),
                                   random_linear_y(n, rng, height), random_linear_y(n, rng, height)});
}

/// pi_1 pullback of a degree-d foliation of P^n, d in {0, 1}: a pencil of hyperplanes
/// (d = 0) or a logarithmic form with three hyperplanes (d = 1).
inline Form builtin_pullback(int n, int d, std::mt19937_64& rng, int height = 100) {
  if (d == 0) return log_form({1, -1}, {random_linear_x(n, rng, height), random_linear_x(n, rng, height)});
  if (d == 1) {
    Rational a = random_nonzero_rational(rng, height), b = random_nonzero_rational(rng, height);
    while (a + b == 0) b = random_nonzero_rational(rng, height);
    return log_form({a, b, -(a + b)},
                    {random_linear_x(n, rng, height), random_linear_x(n, rng, height), random_linear_x(n, rng, height)});
  }
  throw InvalidArgument("pullback builtins exist for degrees 0 and 1");
}

inline FieldFoliation builtin_affine(AffLabeling labeling = AffLabeling::XY) {
  AffPair p = aff_pair(labeling);
  return foliation_from_fields(p.first, p.second);
}

inline FieldFoliation builtin_torus() {
  auto [a, b] = torus_pair();
  return foliation_from_fields(a, b);
}

}  // namespace adjfol
