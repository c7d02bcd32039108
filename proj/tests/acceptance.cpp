// Acceptance run: one [PASS]/[FAIL] line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "adjfol/adjfol.hpp"
#include "oracles.hpp"

using namespace adjfol;

namespace {

const std::uint64_t kSeed = 20240917;

// Collects failed checks for one criterion.
class Report {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  int checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  int checks_ = 0;
  std::vector<std::string> failures_;
};

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string name(char t, int r) { return std::string(1, t) + std::to_string(r); }

const std::vector<std::pair<char, int>>& table_types() {
  static const std::vector<std::pair<char, int>> types = [] {
    std::vector<std::pair<char, int>> out;
    for (int r = 3; r <= 7; ++r) out.emplace_back('B', r);
    for (int r = 4; r <= 7; ++r) out.emplace_back('D', r);
    for (int r = 6; r <= 8; ++r) out.emplace_back('E', r);
    out.emplace_back('F', 4);
    out.emplace_back('G', 2);
    return out;
  }();
  return types;
}

int dual_coxeter(char t, int n) {
  switch (t) {
    case 'B': return 2 * n - 1;
    case 'D': return 2 * n - 2;
    case 'E': return n == 6 ? 12 : n == 7 ? 18 : 30;
    case 'F': return 9;
    case 'G': return 4;
  }
  return 0;
}

// ---------------------------------------------------------------------------

void projective_space(Report& r) {
  for (int n = 1; n <= 5; ++n) {
    MarkedDatum md(build_datum('A', n), 1);
    for (int d = -(n + 3); d <= n + 3; ++d) {
      CohomologyResult c = cohomology(md, d * Weight::fundamental(static_cast<std::size_t>(n), 1));
      auto want = oracle::projective_space(n, d);
      const std::string where = "P^" + std::to_string(n) + " O(" + std::to_string(d) + ")";
      for (int i = 0; i <= n; ++i) {
        BigInt expected = want.count(i) ? want[i] : BigInt(0);
        r.check(c.h(i) == expected, where + " h^" + std::to_string(i) + " = " + str(c.h(i)) + ", want " +
                                        str(expected));
      }
      if (!want.empty()) r.check(c.degree == want.begin()->first, where + " degree " + std::to_string(c.degree));
    }
  }
}

void adjoint_sections(Report& r) {
  const std::vector<int> want{21, 36, 55, 78, 105, 28, 45, 66, 91, 78, 133, 248, 52, 14};
  const auto& types = table_types();
  r.check(types.size() == want.size(), "type list size");
  for (std::size_t i = 0; i < types.size() && i < want.size(); ++i) {
    auto [t, n] = types[i];
    AdjointData ad = adjoint_data(t, n);
    CohomologyResult c = cohomology(ad.md, ad.lambda0);
    r.check(c.h(0) == want[i], name(t, n) + " h^0(E_lambda0) = " + str(c.h(0)) + ", want " + str(want[i]));
    r.check(known_lie_dimension(t, n) == want[i], name(t, n) + " closed-form dim g");
  }
}

void contact_numerics(Report& r) {
  for (auto [t, n] : table_types()) {
    const std::string tn = name(t, n);
    AdjointData ad = adjoint_data(t, n);
    const RootDatum& d = ad.md.ambient();
    const std::size_t mk = ad.md.marked_index();
    const int unit = ad.lambda0[mk];

    // First: root sums over the nilradical, done here directly.
    Weight nil(static_cast<std::size_t>(d.rank())), grade1(static_cast<std::size_t>(d.rank()));
    int dim = 0;
    for (std::size_t k = 0; k < d.num_positive_roots(); ++k) {
      const int c = d.positive_roots()[k][mk];
      if (c == 0) continue;
      ++dim;
      nil += d.root_weight(k);
      if (c == 1) grade1 += d.root_weight(k);
    }
    const int m_dim = (dim - 1) / 2;
    r.check(dim % 2 == 1, tn + " dim X = " + std::to_string(dim) + " is even");
    r.check(nil[mk] == (m_dim + 1) * unit, tn + " nilradical sum gives index " + str(Rational(nil[mk], unit)));
    r.check(grade1[mk] == m_dim * unit, tn + " grade-one sum gives c1(D) " + str(Rational(grade1[mk], unit)));

    // Second: dim X from the dual Coxeter number, c1(D) from the Levi weight system of D.
    const int dim_h = 2 * dual_coxeter(t, n) - 3;
    WeightSystem ws = weight_system(ad.md.levi(), ad.D_weight);
    long det = 0;
    for (const auto& [w, mult] : ws.entries) det += mult * w[mk];
    r.check(dim_h == dim, tn + " dim X from dual Coxeter number " + std::to_string(dim_h));
    r.check(ws.total_dim == 2 * m_dim, tn + " rank D = " + std::to_string(ws.total_dim));
    r.check(det == static_cast<long>(m_dim) * unit, tn + " det D gives " + str(Rational(det, unit)));

    r.check(ad.dim_X == dim && ad.m == m_dim && ad.index == m_dim + 1 && ad.c1_D == m_dim,
            tn + " library contact data");
  }
}

void table_reproduction(Report& r) {
  using M = std::map<Weight, std::int64_t>;
  auto pieces = [](char t, int n) { return wedge2_Ddual_twisted(adjoint_data(t, n), 2).ambient_multiset(); };
  r.check(pieces('G', 2) == M{{Weight{4, -1}, 1}, {Weight{0, 1}, 1}}, "G2: 4l1 - l2 + O(1)");
  r.check(pieces('E', 6) == M{{Weight{0, -1, 1, 0, 1, 0}, 1}, {Weight{0, 1, 0, 0, 0, 0}, 1}},
          "E6: -l2 + l3 + l5 + O(1)");
  r.check(pieces('E', 7) == M{{Weight{-1, 0, 0, 1, 0, 0, 0}, 1}, {Weight{1, 0, 0, 0, 0, 0, 0}, 1}},
          "E7: l4 - l1 + O(1)");

  for (const TableRow& row : adjoint_table(7, true)) {
    r.check(row.dimension_identity, row.type + " dimension identity");
    r.check(row.c1_identity, row.type + " c1 identity");
    r.check(row.compared, row.type + " has a comparison column");
    const bool exact_row = row.type == "G2" || row.type == "E6" || row.type == "E7";
    if (exact_row) r.check(row.agree, row.type + " agrees with the printed decomposition");
    // every disagreement must be explained
    if (!row.agree) r.check(!row.notes.empty(), row.type + " disagrees without a note");
  }
}

void h0_omega2_conclusions(Report& r) {
  for (auto [t, n] : table_types()) {
    const std::string tn = name(t, n);
    AdjointData ad = adjoint_data(t, n);
    H0Omega2 two = h0_omega2(ad, 2);
    r.check(two.exact && two.value == ad.md.ambient().dim_lie_algebra(), tn + " h^0(Omega^2(2)) = " + str(two.value));
    r.check(two.h0_sub == 0 && two.h1_sub == 0, tn + " D^vee(1) has no h^0 or h^1");
    H0Omega2 one = h0_omega2(ad, 1);
    if (one.exact) {
      r.check(one.value == 0, tn + " h^0(Omega^2(1)) = " + str(one.value));
    } else {
      r.check(one.lower == 0 && one.upper == 1, tn + " bounds [" + str(one.lower) + "," + str(one.upper) + "]");
      r.check(one.adjudicated == 0 && one.note.find("paper-adjudicated: 0") != std::string::npos,
              tn + " adjudication note");
    }
  }
}

void representation_checks(Report& r) {
  const std::vector<std::pair<char, int>> types{{'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2},
                                                {'F', 4}, {'A', 6}, {'B', 5}, {'D', 6}, {'E', 6}};
  std::mt19937_64 rng(derive_seed(kSeed, 6));
  int done = 0;
  for (int trial = 0; done < 25; ++trial) {
    auto [t, n] = types[static_cast<std::size_t>(trial) % types.size()];
    RootDatum d = build_datum(t, n);
    Weight w = oracle::random_weight(rng, d.rank(), 0, 2);
    if (weyl_dim(d, w) > 3000) continue;
    WeightSystem ws = weight_system(d, w, 3000);
    r.check(BigInt(ws.total_dim) == weyl_dim(d, w), d.name() + " " + w.pretty());
    ++done;
  }
  Decomposition dec = square_decompose(build_datum('A', 5), Weight::fundamental(5, 3), SquareKind::Exterior);
  std::map<Weight, std::int64_t> dims;
  for (const auto& p : dec.pieces) dims[p.weight] += p.mult * p.dim;
  r.check(dims == std::map<Weight, std::int64_t>{{Weight{0, 1, 0, 1, 0}, 189}, {Weight{0, 0, 0, 0, 0}, 1}},
          "A5 wedge^2 mu3 = F(mu2+mu4) + C");
  r.check(dec.total_dim() == 190, "A5 wedge^2 mu3 has dimension " + str(dec.total_dim()));
}

// Forms built by criteria 7 and 8, rechecked by criterion 9.
std::vector<std::pair<std::string, Form>> g_forms;

void expect_degrees(Report& r, const std::string& label, const Form& w, std::uint64_t seed, TangencyDegree want1,
                    TangencyDegree want2) {
  g_forms.emplace_back(label, w);
  for (int family : {1, 2}) {
    const TangencyDegree want = family == 1 ? want1 : want2;
    auto ds = sample_degrees(w, family, 10, seed, 100);
    r.check(ds.size() == 10, label + " sample count");
    for (const auto& d : ds)
      r.check(d == want, label + " family " + std::to_string(family) + ": " + d.str() + ", want " +
                             want.str());
  }
}

void foliation_degrees(Report& r) {
  for (int n : {2, 3}) {
    const std::string p = "n=" + std::to_string(n) + " ";
    const auto un = static_cast<std::uint64_t>(n);
    std::mt19937_64 rng(derive_seed(kSeed, 70 + un));
    expect_degrees(r, p + "pencil", builtin_pencil(n, rng), kSeed + un, TangencyDegree::finite(0),
                   TangencyDegree::finite(0));
    expect_degrees(r, p + "log4", builtin_log4(n, rng), kSeed + 10 + un, TangencyDegree::finite(0),
                   TangencyDegree::finite(0));
    for (int d : {0, 1})
      expect_degrees(r, p + "pullback d=" + std::to_string(d), builtin_pullback(n, d, rng),
                     kSeed + 20 + 2 * un + static_cast<std::uint64_t>(d), TangencyDegree::minus_inf(),
                     TangencyDegree::finite(d));
  }
}

void affine_foliation(Report& r) {
  for (AffLabeling lab : {AffLabeling::XY, AffLabeling::E1E2}) {
    FieldFoliation f = builtin_affine(lab);
    const std::string label = lab == AffLabeling::XY ? "aff (x,y)" : "aff (e1,e2)";
    g_forms.emplace_back(label, f.omega);
    r.check(integrable(f.omega), label + " integrable");
    r.check(!has_divisorial_singularities(f.omega), label + " saturated");
    auto bd = form_bidegree(f.omega);
    r.check(bd && *bd == (Bidegree{2, 2}), label + " bidegree");
    r.check(is_invariant(f.omega, aff_surface_h1()), label + " invariant surface of class 2h1");
    r.check(is_invariant(f.omega, aff_surface_h2()), label + " invariant surface of class 2h2");
    r.check(bidegree(aff_surface_h1(), 2) == Bidegree{2, 0} && bidegree(aff_surface_h2(), 2) == Bidegree{0, 2},
            "surface classes");
  }
  Form w = builtin_affine().omega;
  std::mt19937_64 rng(derive_seed(kSeed, 8));
  for (int trial = 0; trial < 50; ++trial) {
    Poly h = random_bihomogeneous(2, {1, 1}, rng, 100);
    r.check(!is_invariant(w, h), "random (1,1) section " + std::to_string(trial) + " is invariant");
  }
}

void property_suites(Report& r) {
  const std::vector<std::pair<char, int>> all{{'A', 1}, {'A', 4}, {'B', 3}, {'C', 4}, {'D', 5}, {'E', 6},
                                              {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}};
  std::mt19937_64 rng(derive_seed(kSeed, 9));
  for (int trial = 0; trial < 1000; ++trial) {
    auto [t, n] = all[static_cast<std::size_t>(trial) % all.size()];
    RootDatum d = build_datum(t, n);
    Weight w = oracle::random_weight(rng, d.rank(), -6, 6);
    const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(d.rank()));
    r.check(simple_reflection(d, i, simple_reflection(d, i, w)) == w, d.name() + " s" + std::to_string(i));
  }

  for (int trial = 0; trial < 200; ++trial) {
    auto [t, n] = all[static_cast<std::size_t>(trial) % all.size()];
    RootDatum d = build_datum(t, n);
    Weight lam = oracle::random_weight(rng, d.rank(), -8, 3);
    DotResult base = dot_classify(d, lam);
    std::mt19937_64 local(rng());
    NegativePicker random_pick = [&local](const std::vector<std::size_t>& neg) {
      return neg[static_cast<std::size_t>(local() % neg.size())];
    };
    NegativePicker highest = [](const std::vector<std::size_t>& neg) { return neg.back(); };
    r.check(dot_classify(d, lam, random_pick) == base && dot_classify(d, lam, highest) == base,
            d.name() + " dot order " + lam.pretty());
    oracle::SignCount sc = oracle::sign_count(d, lam);
    r.check(base.singular() == sc.singular && (sc.singular || base.index_p == sc.negatives),
            d.name() + " dot index " + lam.pretty());
  }

  r.check(!g_forms.empty(), "constructed forms");
  for (const auto& [label, w] : g_forms) r.check(euler_contractions_vanish(w), label + " Euler contractions");
  for (int n : {2, 3, 4}) {
    std::mt19937_64 frng(derive_seed(kSeed, 90 + static_cast<std::uint64_t>(n)));
    Form p = builtin_pencil(n, frng);
    Form l = builtin_log4(n, frng);
    r.check(euler_contractions_vanish(p), "pencil n=" + std::to_string(n) + " Euler contractions");
    r.check(euler_contractions_vanish(l), "log4 n=" + std::to_string(n) + " Euler contractions");
  }
  r.check(euler_contractions_vanish(builtin_torus().omega), "torus Euler contractions");

  const std::vector<std::pair<char, std::vector<int>>> reps{
      {'A', {1, 1}}, {'A', {2, 0, 0}}, {'B', {0, 1}},       {'C', {1, 0, 0}},    {'G', {1, 0}},
      {'G', {0, 1}}, {'D', {0, 0, 0, 1}}, {'A', {0, 1, 0, 0}}, {'B', {1, 0, 0}}, {'F', {0, 0, 0, 1}}};
  for (const auto& [t, c] : reps) {
    RootDatum d = build_datum(t, static_cast<int>(c.size()));
    Weight top(c);
    WeightSystem ws = weight_system(d, top);
    RootSubsystem full = RootSubsystem::full(d);
    auto got = character(full, square_decompose(d, top, SquareKind::Exterior));
    for (const auto& [w, m] : character(full, square_decompose(d, top, SquareKind::Symmetric))) got[w] += m;
    r.check(got == oracle::tensor_square(ws.entries), d.name() + " " + top.pretty() + " tensor square");
  }
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Report&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "projective space cohomology matches binomials", projective_space},
      {2, "h^0(E_lambda0) = dim g for the adjoint table types", adjoint_sections},
      {3, "contact numerics: dim X odd, c1(D) = m, index = m + 1", contact_numerics},
      {4, "wedge^2 D^vee(2) decompositions and comparison column", table_reproduction},
      {5, "h^0(Omega^2(2)) = dim g and h^0(Omega^2(1)) = 0", h0_omega2_conclusions},
      {6, "Freudenthal vs Weyl dimension and wedge^2 of A5 mu3", representation_checks},
      {7, "tangency degrees of pencil, log and pullback foliations", foliation_degrees},
      {8, "affine-action foliation and its invariant surfaces", affine_foliation},
      {9, "property suites", property_suites},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Report rep;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(rep);
    } catch (const std::exception& e) {
      rep.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = rep.failures().empty();
    if (!ok) ++failed;
    std::printf("[%s] %d: %s (%d checks, %.1fs)\n", ok ? "PASS" : "FAIL", c.id, c.title, rep.checks(), secs);
    for (std::size_t i = 0; i < rep.failures().size() && i < 10; ++i)
      std::printf("       %s\n", rep.failures()[i].c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
