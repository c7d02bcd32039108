#pragma once

// Polynomial differential forms: coefficient polynomials indexed by the bitmask
// of the differentials dv_{i1} ^ ... ^ dv_{ik}, i1 < ... < ik.

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "adjfol/poly.hpp"

namespace adjfol {

using VectorField = std::vector<Poly>;  // component v multiplies d/dv

class Form {
 public:
  using Mask = std::uint32_t;

  Form() = default;
  Form(int nvars, int degree) : nvars_(nvars), degree_(degree) {
    if (degree < 0 || degree > nvars) throw InvalidArgument("form degree out of range");
  }

  static Form function(const Poly& f) {
    Form w(f.nvars(), 0);
    w.add(0, f);
    return w;
  }
  static Form differential(int nvars, int v) {
    Form w(nvars, 1);
    w.add(Mask{1} << v, Poly::constant(nvars, 1));
    return w;
  }
  /// Exterior derivative of a function.
  static Form exact(const Poly& f) { return function(f).d(); }

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const std::map<Mask, Poly>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  Poly coeff(Mask m) const {
    auto it = c_.find(m);
    return it == c_.end() ? Poly(nvars_) : it->second;
  }
  /// Coefficient of the single differential dv in a 1-form.
  Poly coeff1(int v) const { return coeff(Mask{1} << v); }

  void add(Mask m, const Poly& p) {
    if (std::popcount(m) != degree_) throw InvalidArgument("differential mask does not match form degree");
    if (p.is_zero()) return;
    auto [it, inserted] = c_.try_emplace(m, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  Form& operator+=(const Form& o) {
    check_compatible(o);
    for (const auto& [m, p] : o.c_) add(m, p);
    return *this;
  }
  Form& operator-=(const Form& o) {
    check_compatible(o);
    for (const auto& [m, p] : o.c_) add(m, -p);
    return *this;
  }
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Poly& f, const Form& w) {
    Form out(w.nvars_, w.degree_);
    for (const auto& [m, p] : w.c_) out.add(m, f * p);
    return out;
  }
  friend Form operator*(const Rational& s, const Form& w) { return Poly::constant(w.nvars_, s) * w; }
  friend bool operator==(const Form& a, const Form& b) {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.c_ == b.c_;
  }

  friend Form wedge(const Form& a, const Form& b) {
    if (a.nvars_ != b.nvars_) throw InvalidArgument("forms live on different spaces");
    Form out(a.nvars_, a.degree_ + b.degree_);
    for (const auto& [ma, pa] : a.c_)
      for (const auto& [mb, pb] : b.c_) {
        if (ma & mb) continue;
        out.add(ma | mb, merge_sign(ma, mb) < 0 ? -(pa * pb) : pa * pb);
      }
    return out;
  }

  Form d() const {
    Form out(nvars_, degree_ + 1);
    for (const auto& [m, p] : c_)
      for (int v = 0; v < nvars_; ++v) {
        if (m & (Mask{1} << v)) continue;
        Poly dp = p.derivative(v);
        if (dp.is_zero()) continue;
        out.add(m | (Mask{1} << v), below(m, v) % 2 ? -dp : dp);
      }
    return out;
  }

  /// Interior product with a vector field.
  Form contract(const VectorField& V) const {
    if (static_cast<int>(V.size()) != nvars_) throw InvalidArgument("vector field has wrong number of components");
    if (degree_ == 0) return Form(nvars_, 0);
    Form out(nvars_, degree_ - 1);
    for (const auto& [m, p] : c_)
      for (int v = 0; v < nvars_; ++v) {
        if (!(m & (Mask{1} << v)) || V[static_cast<std::size_t>(v)].is_zero()) continue;
        Poly t = V[static_cast<std::size_t>(v)] * p;
        out.add(m & ~(Mask{1} << v), below(m, v) % 2 ? -t : t);
      }
    return out;
  }

  /// Pullback along the polynomial map v -> images[v].
  Form pullback(const std::vector<Poly>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw InvalidArgument("pullback needs one image per variable");
    const int target = images.empty() ? 0 : images.front().nvars();
    std::vector<Form> dimg;
    for (const auto& f : images) dimg.push_back(exact(f));
    Form out(target, degree_);
    for (const auto& [m, p] : c_) {
      Form term = function(p.compose(images));
      for (int v = 0; v < nvars_; ++v)
        if (m & (Mask{1} << v)) term = wedge(term, dimg[static_cast<std::size_t>(v)]);
      out += term;
    }
    return out;
  }

  Form map_coefficients(const std::function<Poly(const Poly&)>& f) const {
    Form out(nvars_, degree_);
    for (const auto& [m, p] : c_) out.add(m, f(p));
    return out;
  }

 private:
  static int below(Mask m, int v) { return std::popcount(m & ((Mask{1} << v) - 1)); }
  static int merge_sign(Mask a, Mask b) {
    int inversions = 0;
    for (int v = 0; v < 32; ++v)
      if (b & (Mask{1} << v)) inversions += std::popcount(a >> (v + 1));
    return inversions % 2 ? -1 : 1;
  }
  void check_compatible(const Form& o) const {
    if (o.nvars_ != nvars_ || o.degree_ != degree_) throw InvalidArgument("adding forms of different type");
  }

  int nvars_ = 0;
  int degree_ = 0;
  std::map<Mask, Poly> c_;
};

}  // namespace adjfol
