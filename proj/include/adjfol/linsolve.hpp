#pragma once

// Exact sparse Gaussian elimination over Q.

#include <map>
#include <optional>
#include <vector>

#include "adjfol/rational.hpp"

namespace adjfol {

class LinearSystem {
 public:
  using Row = std::map<int, Rational>;

  explicit LinearSystem(int unknowns) : n_(unknowns) {}

  int unknowns() const { return n_; }
  bool inconsistent() const { return inconsistent_; }
  int rank() const { return static_cast<int>(pivots_.size()); }

  /// Adds sum_j row[j] x_j = rhs, reducing it immediately against the existing pivots.
  void add_equation(Row row, Rational rhs) {
    for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);
    for (auto it = row.begin(); it != row.end();) {
      auto p = pivots_.find(it->first);
      if (p == pivots_.end()) {
        ++it;
        continue;
      }
      const int col = it->first;
      const Rational f = it->second;
      for (const auto& [j, a] : p->second.row) {
        Rational& e = row[j];
        e -= f * a;
      }
      rhs -= f * p->second.rhs;
      for (auto jt = row.begin(); jt != row.end();) jt = jt->second == 0 ? row.erase(jt) : std::next(jt);
      it = row.upper_bound(col);
    }
    if (row.empty()) {
      if (rhs != 0) inconsistent_ = true;
      return;
    }
    const int lead = row.begin()->first;
    const Rational inv = 1 / row.begin()->second;
    for (auto& [j, a] : row) a *= inv;
    pivots_[lead] = Pivot{std::move(row), rhs * inv};
  }

  /// One solution with the free unknowns set to zero, or nullopt when inconsistent.
  std::optional<std::vector<Rational>> solve() const {
    if (inconsistent_) return std::nullopt;
    std::vector<Rational> x(static_cast<std::size_t>(n_), Rational(0));
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      Rational v = it->second.rhs;
      for (const auto& [j, a] : it->second.row)
        if (j != it->first) v -= a * x[static_cast<std::size_t>(j)];
      x[static_cast<std::size_t>(it->first)] = v;
    }
    return x;
  }

 private:
  struct Pivot {
    Row row;
    Rational rhs;
  };
  int n_;
  bool inconsistent_ = false;
  std::map<int, Pivot> pivots_;
};

}  // namespace adjfol
