#include <gtest/gtest.h>

#include <random>

#include "adjfol/adjfol.hpp"
#include "oracles.hpp"

using namespace adjfol;

namespace {

const std::vector<std::pair<char, int>> kAllTypes{{'A', 1}, {'A', 2}, {'A', 5}, {'B', 2}, {'B', 3}, {'B', 5},
                                                  {'C', 2}, {'C', 3}, {'C', 4}, {'D', 4}, {'D', 5}, {'D', 7},
                                                  {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}};

}  // namespace

// ---------------------------------------------------------------------------
// rootsystem

TEST(RootSystem, A2CartanAndRoots) {
  RootDatum d = build_datum('A', 2);
  EXPECT_EQ(d.cartan(), (std::vector<std::vector<int>>{{2, -1}, {-1, 2}}));
  EXPECT_EQ(d.num_positive_roots(), 3u);
  EXPECT_EQ(d.simple_root(1), (Weight{2, -1}));
}

TEST(RootSystem, G2CartanAndRoots) {
  RootDatum d = build_datum('G', 2);
  EXPECT_EQ(d.cartan(), (std::vector<std::vector<int>>{{2, -1}, {-3, 2}}));
  EXPECT_EQ(d.num_positive_roots(), 6u);
}

TEST(RootSystem, E8HasOneHundredTwentyPositiveRoots) {
  RootDatum d = build_datum('E', 8);
  EXPECT_EQ(d.num_positive_roots(), 120u);
  EXPECT_EQ((248 - 8) / 2, 120);
}

TEST(RootSystem, CartanShapeAndSymmetrizer) {
  for (auto [t, r] : kAllTypes) {
    RootDatum d = build_datum(t, r);
    const int n = d.rank();
    for (int i = 0; i < n; ++i) {
      EXPECT_EQ(d.cartan(i, i), 2);
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        EXPECT_TRUE(d.cartan(i, j) <= 0 && d.cartan(i, j) >= -3) << d.name();
        EXPECT_EQ(d.cartan(i, j) == 0, d.cartan(j, i) == 0) << d.name();
        EXPECT_EQ(d.symmetrizers()[i] * d.cartan(i, j), d.symmetrizers()[j] * d.cartan(j, i)) << d.name();
      }
    }
    // Sylvester: every leading principal minor of D*C is positive.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = d.symmetrizers()[i] * d.cartan(i, j);
    for (int k = 1; k <= n; ++k) {
      auto a = m;
      Rational det = 1;
      for (int c = 0; c < k; ++c) {
        int p = c;
        while (p < k && a[p][c] == 0) ++p;
        ASSERT_LT(p, k) << d.name();
        std::swap(a[p], a[c]);
        if (p != c) det = -det;
        det *= a[c][c];
        for (int r2 = c + 1; r2 < k; ++r2) {
          Rational f = a[r2][c] / a[c][c];
          for (int j = c; j < k; ++j) a[r2][j] -= f * a[c][j];
        }
      }
      EXPECT_GT(det, 0) << d.name() << " minor " << k;
    }
  }
}

TEST(RootSystem, DimensionsMatchClosedForms) {
  for (auto [t, r] : kAllTypes) {
    RootDatum d = build_datum(t, r);
    EXPECT_EQ(d.dim_lie_algebra(), known_lie_dimension(t, r)) << d.name();
  }
  EXPECT_EQ(build_datum('A', 7).num_positive_roots(), 28u);
  EXPECT_EQ(build_datum('E', 6).dim_lie_algebra(), 78);
  EXPECT_EQ(build_datum('E', 7).dim_lie_algebra(), 133);
  EXPECT_EQ(build_datum('F', 4).dim_lie_algebra(), 52);
}

TEST(RootSystem, RootsAreNonnegativeAndSimpleRootsAreUnitVectors) {
  for (auto [t, r] : kAllTypes) {
    RootDatum d = build_datum(t, r);
    for (const auto& root : d.positive_roots())
      for (int c : root) EXPECT_GE(c, 0);
    for (int i = 0; i < d.rank(); ++i) {
      RootVector e(d.rank(), 0);
      e[i] = 1;
      EXPECT_NE(find_positive_root(d, e), static_cast<std::size_t>(-1)) << d.name();
    }
  }
}

TEST(RootSystem, SumOfPositiveRootsIsTwiceDelta) {
  for (auto [t, r] : kAllTypes) {
    RootDatum d = build_datum(t, r);
    Weight s(static_cast<std::size_t>(d.rank()));
    for (std::size_t k = 0; k < d.num_positive_roots(); ++k) s += d.root_weight(k);
    EXPECT_EQ(s, 2 * weyl_vector(d)) << d.name();
  }
}

TEST(RootSystem, RootWeightsAreCartanRows) {
  // alpha_j in fundamental coordinates has entries <alpha_j, alpha_i^vee>.
  for (auto [t, r] : kAllTypes) {
    RootDatum d = build_datum(t, r);
    for (int j = 1; j <= d.rank(); ++j)
      for (int i = 1; i <= d.rank(); ++i) EXPECT_EQ(d.simple_root(j).at_node(i), d.cartan(j - 1, i - 1)) << d.name();
  }
}

TEST(RootSystem, BuildsAreDeterministic) {
  for (auto [t, r] : kAllTypes) EXPECT_TRUE(build_datum(t, r) == build_datum(t, r));
}

TEST(RootSystem, WeylVector) {
  EXPECT_EQ(weyl_vector(build_datum('A', 2)), (Weight{1, 1}));
  EXPECT_EQ(weyl_vector(build_datum('G', 2)), (Weight{1, 1}));
  EXPECT_EQ(weyl_vector(build_datum('E', 6)), (Weight{1, 1, 1, 1, 1, 1}));
}

TEST(RootSystem, HighestRoots) {
  EXPECT_EQ(highest_root(build_datum('C', 3)), (Weight{2, 0, 0}));
  EXPECT_EQ(highest_root(build_datum('C', 5)), (Weight{2, 0, 0, 0, 0}));
  for (int n : {4, 5, 6, 7}) EXPECT_EQ(highest_root(build_datum('D', n)), Weight::fundamental(n, 2));
  for (int n : {3, 4, 7}) EXPECT_EQ(highest_root(build_datum('B', n)), Weight::fundamental(n, 2));
  EXPECT_EQ(highest_root(build_datum('E', 6)), Weight::fundamental(6, 2));
  EXPECT_EQ(highest_root(build_datum('E', 7)), Weight::fundamental(7, 1));
  EXPECT_EQ(highest_root(build_datum('E', 8)), Weight::fundamental(8, 8));
  EXPECT_EQ(highest_root(build_datum('F', 4)), Weight::fundamental(4, 1));
  EXPECT_EQ(highest_root(build_datum('G', 2)), Weight::fundamental(2, 2));
  EXPECT_EQ(highest_root(build_datum('A', 4)), (Weight{1, 0, 0, 1}));
}

TEST(RootSystem, Pairings) {
  for (auto [t, r] : kAllTypes) {
    RootDatum d = build_datum(t, r);
    for (int i = 1; i <= d.rank(); ++i)
      for (int j = 1; j <= d.rank(); ++j) {
        RootVector e(d.rank(), 0);
        e[j - 1] = 1;
        EXPECT_EQ(pairing(d, Weight::fundamental(d.rank(), i), find_positive_root(d, e)), i == j ? 1 : 0);
      }
    for (std::size_t k = 0; k < d.num_positive_roots(); ++k) {
      int height = 0;
      for (int c : d.coroot(k)) height += c;
      EXPECT_EQ(pairing(d, weyl_vector(d), k), height) << d.name();
    }
  }
  RootDatum a2 = build_datum('A', 2);
  EXPECT_EQ(pairing(a2, Weight{1, 1}, find_positive_root(a2, {1, 1})), 2);
  EXPECT_THROW(pairing(a2, Weight{1, 1}, 3), InvalidArgument);
}

TEST(RootSystem, InvalidTypesAreRejected) {
  EXPECT_THROW(build_datum('A', 0), InvalidArgument);
  EXPECT_THROW(build_datum('B', 1), InvalidArgument);
  EXPECT_THROW(build_datum('C', 1), InvalidArgument);
  EXPECT_THROW(build_datum('D', 3), InvalidArgument);
  EXPECT_THROW(build_datum('E', 5), InvalidArgument);
  EXPECT_THROW(build_datum('E', 9), InvalidArgument);
  EXPECT_THROW(build_datum('F', 3), InvalidArgument);
  EXPECT_THROW(build_datum('G', 3), InvalidArgument);
  EXPECT_THROW(build_datum('H', 3), InvalidArgument);
  EXPECT_THROW(build_datum('A', 11), InvalidArgument);
  EXPECT_NO_THROW(build_datum('A', 11, 12));
  try {
    build_datum('D', 3);
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("4"), std::string::npos) << e.what();
  }
}

// ---------------------------------------------------------------------------
// weylgroup

TEST(WeylGroup, SimpleReflectionExamples) {
  EXPECT_EQ(simple_reflection(build_datum('A', 2), 1, Weight{1, 0}), (Weight{-1, 1}));
  // D4: node 2 is the branch node and meets nodes 1, 3 and 4.
  EXPECT_EQ(simple_reflection(build_datum('D', 4), 2, Weight::fundamental(4, 2)), (Weight{1, -1, 1, 1}));
  for (int n : {5, 6, 7}) {
    Weight expect(static_cast<std::size_t>(n));
    expect[0] = 1;
    expect[1] = -1;
    expect[2] = 1;
    EXPECT_EQ(simple_reflection(build_datum('D', n), 2, Weight::fundamental(n, 2)), expect);
  }
  RootDatum e6 = build_datum('E', 6);
  Weight w{3, 0, -2, 1, 0, 5};
  EXPECT_EQ(simple_reflection(e6, 2, w), w);
  EXPECT_THROW(simple_reflection(e6, 7, w), InvalidArgument);
  EXPECT_THROW(simple_reflection(e6, 0, w), InvalidArgument);
}

TEST(WeylGroup, ReflectionsAreInvolutions) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    auto [t, r] = kAllTypes[trial % kAllTypes.size()];
    RootDatum d = build_datum(t, r);
    Weight w = oracle::random_weight(rng, d.rank(), -6, 6);
    int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(d.rank()));
    EXPECT_EQ(simple_reflection(d, i, simple_reflection(d, i, w)), w);
  }
}

TEST(WeylGroup, DotClassifyExamples) {
  RootDatum e7 = build_datum('E', 7);
  Weight lam{2, 0, 1, 0, 0, 3, 1};
  DotResult r = dot_classify(e7, lam);
  EXPECT_TRUE(r.regular());
  EXPECT_EQ(r.index_p, 0);
  EXPECT_EQ(r.dominant_weight, lam);

  EXPECT_TRUE(dot_classify(e7, -weyl_vector(e7)).singular());

  DotResult a1 = dot_classify(build_datum('A', 1), Weight{-2});
  ASSERT_TRUE(a1.regular());
  EXPECT_EQ(a1.index_p, 1);
  EXPECT_EQ(a1.dominant_weight, Weight{0});
}

TEST(WeylGroup, DotClassifyMatchesSignCounts) {
  std::mt19937_64 rng(5);
  for (auto [t, r] : kAllTypes) {
    RootDatum d = build_datum(t, r);
    for (int trial = 0; trial < 60; ++trial) {
      Weight lam = oracle::random_weight(rng, d.rank(), -7, 4);
      DotResult got = dot_classify(d, lam);
      oracle::SignCount want = oracle::sign_count(d, lam);
      ASSERT_EQ(got.singular(), want.singular) << d.name() << " " << lam.pretty();
      if (got.regular()) {
        EXPECT_EQ(got.index_p, want.negatives) << d.name() << " " << lam.pretty();
        Weight v = got.dominant_weight + weyl_vector(d);
        for (std::size_t i = 0; i < v.size(); ++i) EXPECT_GT(v[i], 0);
      }
    }
  }
}

TEST(WeylGroup, DotClassifyIsOrderIndependent) {
  std::mt19937_64 rng(99);
  int checked = 0;
  for (int trial = 0; checked < 200; ++trial) {
    auto [t, r] = kAllTypes[trial % kAllTypes.size()];
    RootDatum d = build_datum(t, r);
    Weight lam = oracle::random_weight(rng, d.rank(), -8, 3);
    DotResult base = dot_classify(d, lam);
    std::mt19937_64 local(rng());
    NegativePicker random_pick = [&local](const std::vector<std::size_t>& neg) {
      return neg[static_cast<std::size_t>(local() % neg.size())];
    };
    NegativePicker highest = [](const std::vector<std::size_t>& neg) { return neg.back(); };
    EXPECT_EQ(dot_classify(d, lam, random_pick), base) << d.name() << " " << lam.pretty();
    EXPECT_EQ(dot_classify(d, lam, highest), base) << d.name() << " " << lam.pretty();
    ++checked;
  }
}

TEST(WeylGroup, SerreDualityIndicesOnProjectiveSpace) {
  for (int n = 1; n <= 5; ++n) {
    RootDatum d = build_datum('A', n);
    for (int k = -(n + 4); k <= n + 4; ++k) {
      DotResult a = dot_classify(d, k * Weight::fundamental(n, 1));
      DotResult b = dot_classify(d, (-k - n - 1) * Weight::fundamental(n, 1));
      ASSERT_EQ(a.regular(), b.regular());
      if (a.regular()) {
        EXPECT_EQ(a.index_p + b.index_p, n);
      }
    }
  }
}

TEST(WeylGroup, ToDominant) {
  RootDatum d = build_datum('B', 3);
  auto [w, steps] = to_dominant(d, Weight{-1, 0, 0});
  EXPECT_TRUE(w.is_dominant());
  EXPECT_EQ(w, (Weight{1, 0, 0}));
  EXPECT_GT(steps, 0);
}

// ---------------------------------------------------------------------------
// parabolic

TEST(Parabolic, E6NodeTwoLevi) {
  MarkedDatum md(build_datum('E', 6), 2);
  LeviDiagram ld = levi_diagram(md);
  ASSERT_EQ(ld.components.size(), 1u);
  EXPECT_EQ(ld.components[0].name(), "A5");
  const std::vector<int> ambient{1, 3, 4, 5, 6};
  for (int k = 0; k < 5; ++k) {
    EXPECT_EQ(ld.node_map.at(ambient[k]).component, 0);
    EXPECT_EQ(ld.node_map.at(ambient[k]).local_node, k + 1);
  }
}

TEST(Parabolic, LeviExamples) {
  for (int n = 2; n <= 6; ++n) {
    LeviDiagram ld = levi_diagram(MarkedDatum(build_datum('A', n), 1));
    ASSERT_EQ(ld.components.size(), 1u);
    EXPECT_EQ(ld.components[0].name(), "A" + std::to_string(n - 1));
  }
  for (int n = 4; n <= 7; ++n) {
    LeviDiagram ld = levi_diagram(MarkedDatum(build_datum('B', n), 2));
    EXPECT_EQ(ld.name(), "A1xB" + std::to_string(n - 2));
  }
  EXPECT_EQ(levi_diagram(MarkedDatum(build_datum('B', 3), 2)).name(), "A1xA1");
  EXPECT_EQ(levi_diagram(MarkedDatum(build_datum('D', 5), 2)).name(), "A1xA3");
  EXPECT_EQ(levi_diagram(MarkedDatum(build_datum('E', 7), 1)).name(), "D6");
  EXPECT_EQ(levi_diagram(MarkedDatum(build_datum('E', 8), 8)).name(), "E7");
  EXPECT_EQ(levi_diagram(MarkedDatum(build_datum('F', 4), 1)).name(), "C3");
  EXPECT_EQ(levi_diagram(MarkedDatum(build_datum('G', 2), 2)).name(), "A1");
}

TEST(Parabolic, LeviPreservesEdgesAndCountsRoots) {
  for (auto [t, r] : kAllTypes) {
    RootDatum d = build_datum(t, r);
    for (int node = 1; node <= d.rank(); ++node) {
      MarkedDatum md(d, node);
      LeviDiagram ld = levi_diagram(md);
      EXPECT_EQ(ld.rank(), d.rank() - 1);
      for (const auto& [a, la] : ld.node_map)
        for (const auto& [b, lb] : ld.node_map) {
          const int amb = d.cartan(a - 1, b - 1);
          if (la.component != lb.component) {
            EXPECT_EQ(amb, 0);
            continue;
          }
          EXPECT_EQ(ld.components[la.component].cartan(la.local_node - 1, lb.local_node - 1), amb)
              << d.name() << " node " << node;
        }
      std::size_t levi_roots = 0;
      for (const auto& c : ld.components) levi_roots += c.num_positive_roots();
      EXPECT_EQ(static_cast<std::size_t>(nilradical_size(md)) + levi_roots, d.num_positive_roots());
      EXPECT_EQ(md.levi().roots().size(), levi_roots);
    }
  }
}

TEST(Parabolic, BundleWeights) {
  MarkedDatum e6(build_datum('E', 6), 2);
  EXPECT_TRUE(is_bundle_weight(e6, highest_root(e6.ambient())));
  MarkedDatum d5(build_datum('D', 5), 2);
  EXPECT_TRUE(is_bundle_weight(d5, Weight{1, -2, 1, 0, 0}));
  EXPECT_FALSE(is_bundle_weight(d5, Weight{-1, 0, 0, 0, 0}));
  EXPECT_TRUE(is_bundle_weight(d5, Weight{0, -7, 0, 0, 0}));
}

TEST(Parabolic, Branching) {
  MarkedDatum e6(build_datum('E', 6), 2);
  LeviBranch b = branch_to_levi(e6, Weight::fundamental(6, 4));
  ASSERT_EQ(b.levi_weights.size(), 1u);
  EXPECT_EQ(b.levi_weights[0], (Weight{0, 0, 1, 0, 0}));
  EXPECT_EQ(b.center_coord, 0);

  for (auto [t, r] : kAllTypes) {
    RootDatum d = build_datum(t, r);
    MarkedDatum md(d, d.rank());
    LeviBranch c = branch_to_levi(md, 3 * Weight::fundamental(d.rank(), d.rank()));
    for (const auto& w : c.levi_weights) EXPECT_TRUE(w.is_zero());
    EXPECT_EQ(c.center_coord, 3);
  }

  for (int n = 4; n <= 6; ++n) {
    MarkedDatum bn(build_datum('B', n), 2);
    Weight w(static_cast<std::size_t>(n));
    w[0] = 1;
    w[2] = 1;
    LeviBranch br = branch_to_levi(bn, w);
    ASSERT_EQ(br.levi_weights.size(), 2u);
    EXPECT_EQ(br.levi_weights[0], Weight{1});
    EXPECT_EQ(br.levi_weights[1], Weight::fundamental(n - 2, 1));
    EXPECT_EQ(br.center_coord, 0);
    EXPECT_EQ(lift_from_levi(bn, levi_diagram(bn), br), w);
  }
  EXPECT_THROW(branch_to_levi(MarkedDatum(build_datum('D', 5), 2), Weight{-1, 0, 0, 0, 0}), InvalidArgument);
}

TEST(Parabolic, NilradicalSizes) {
  EXPECT_EQ(nilradical_size(MarkedDatum(build_datum('A', 1), 1)), 1);
  EXPECT_EQ(nilradical_size(MarkedDatum(build_datum('G', 2), 2)), 5);
  for (int n = 2; n <= 7; ++n) {
    EXPECT_EQ(nilradical_size(build_datum('A', n), {1, n}), 2 * n - 1);
    EXPECT_EQ(nilradical_size(MarkedDatum(build_datum('A', n), 1)), n);
  }
}

TEST(Parabolic, AdjointNodesGiveOddDimension) {
  for (auto [t, r] : kAllTypes) {
    if (t == 'A') continue;
    RootDatum d = build_datum(t, r);
    Weight h = highest_root(d);
    for (int node = 1; node <= d.rank(); ++node)
      if (h.at_node(node) != 0) {
        EXPECT_EQ(nilradical_size(MarkedDatum(d, node)) % 2, 1) << d.name();
      }
  }
}
