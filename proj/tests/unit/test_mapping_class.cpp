#include <gtest/gtest.h>

#include "fluxkit/mapping_class.hpp"
#include "generators.hpp"

using namespace fluxkit;
using fluxkit::testgen::Rng;

namespace {

HomologyClass cls(Genus g, std::vector<int> v) {
  std::vector<Integer> c(v.begin(), v.end());
  return HomologyClass(g, c);
}

CurveClass curve(const std::string& name, Genus g, std::vector<int> v) { return CurveClass(name, cls(g, v)); }

// Column-by-column expansion of b -> b + e i(b, a) a, with the pairing
// written as a dot product against the explicit Gram matrix.
SpMatrix oracle_transvection(const HomologyClass& a, int e) {
  const Genus g = a.genus();
  const std::size_t n = g.rank(), h = n / 2;
  SpMatrix m(g);
  for (std::size_t col = 0; col < n; ++col) {
    Integer pair = 0;  // i(e_col, a)
    for (std::size_t j = 0; j < n; ++j) {
      int gram = 0;
      if (col < h && j == col + h) gram = 1;
      if (col >= h && j + h == col) gram = -1;
      pair += gram * a[j];
    }
    for (std::size_t r = 0; r < n; ++r) m(r, col) = (r == col ? 1 : 0) + e * pair * a[r];
  }
  return m;
}

}  // namespace

TEST(CurveClass, RejectsNonPrimitive) {
  const Genus g(2);
  EXPECT_THROW(curve("bad", g, {2, 0, 0, 0}), ConfigurationError);
  EXPECT_NO_THROW(curve("sep", g, {0, 0, 0, 0}));
}

TEST(Transvection, X1SendsY1ToY1MinusX1) {
  const Genus g(2);
  const auto m = transvection(HomologyClass::x(g, 1));
  EXPECT_EQ(m.apply(HomologyClass::y(g, 1)), HomologyClass::y(g, 1) - HomologyClass::x(g, 1));
  EXPECT_EQ(m.apply(HomologyClass::x(g, 1)), HomologyClass::x(g, 1));
  EXPECT_EQ(m.apply(HomologyClass::x(g, 2)), HomologyClass::x(g, 2));
  EXPECT_EQ(m.apply(HomologyClass::y(g, 2)), HomologyClass::y(g, 2));
}

TEST(Transvection, ZeroClassIsIdentity) {
  EXPECT_TRUE(transvection(HomologyClass(Genus(3))).is_identity());
}

TEST(Transvection, FullMatrixForX1PlusY2) {
  const Genus g(2);
  const auto m = transvection(HomologyClass::x(g, 1) + HomologyClass::y(g, 2));
  const int want[4][4] = {{1, 1, -1, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 1, -1, 1}};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(m(r, c), want[r][c]) << r << "," << c;
}

TEST(Transvection, MatchesOracleAndIsSymplectic) {
  Rng rng(21);
  for (int gi = 2; gi <= 4; ++gi) {
    for (int n = 0; n < 100; ++n) {
      const auto a = testgen::random_primitive(rng, Genus(gi));
      for (int e : {1, -1}) {
        const auto m = transvection(a, e);
        EXPECT_EQ(m, oracle_transvection(a, e));
        EXPECT_TRUE(is_symplectic(m));
      }
      EXPECT_TRUE((transvection(a, 1) * transvection(a, -1)).is_identity());
    }
  }
}

TEST(WordMatrix, EmptyAndCancellingWords) {
  const Genus g(3);
  EXPECT_TRUE(word_matrix(TwistWord{}, g).is_identity());
  const auto a = curve("a", g, {1, 0, 1, 0, 0, 1});
  TwistWord w;
  w.push(a, 1).push(a, -1);
  EXPECT_TRUE(word_matrix(w, g).is_identity());
}

TEST(WordMatrix, BraidIdentityX1Y1) {
  const Genus g(2);
  const auto x1 = curve("x1", g, {1, 0, 0, 0}), y1 = curve("y1", g, {0, 0, 1, 0});
  TwistWord l, r;
  l.push(x1).push(y1).push(x1);
  r.push(y1).push(x1).push(y1);
  EXPECT_EQ(word_matrix(l, g), word_matrix(r, g));
}

TEST(WordMatrix, ProductAndInverse) {
  Rng rng(22);
  const Genus g(3);
  for (int n = 0; n < 40; ++n) {
    const auto u = testgen::random_twist_word(rng, g, 4), v = testgen::random_twist_word(rng, g, 3);
    EXPECT_EQ(word_matrix(u * v, g), word_matrix(u, g) * word_matrix(v, g));
    EXPECT_TRUE((word_matrix(u, g) * word_matrix(u.inverse(), g)).is_identity());
    EXPECT_EQ(word_matrix(u, g).inverse(), word_matrix(u.inverse(), g));
    EXPECT_TRUE(is_symplectic(word_matrix(u, g)));
  }
}

TEST(IsSymplectic, Examples) {
  const Genus g(2);
  EXPECT_TRUE(is_symplectic(SpMatrix::identity(g)));
  auto d = SpMatrix::identity(g);
  d(0, 0) = 2;
  EXPECT_FALSE(is_symplectic(d));
  EXPECT_THROW(d.inverse(), PreconditionError);
}

TEST(IsTorelli, Examples) {
  const Genus g(3);
  const auto xg = curve("xg", g, {0, 0, 1, 0, 0, 0}), xg2 = curve("xg'", g, {0, 0, 1, 0, 0, 0});
  TwistWord bp;
  bp.push(xg).push(xg2, -1);
  EXPECT_TRUE(is_torelli(bp, g));

  TwistWord single;
  single.push(xg);
  EXPECT_FALSE(is_torelli(single, g));

  const auto a = curve("a", g, {1, 0, 0, 0, 0, 0}), b = curve("b", g, {0, 1, 0, 0, 0, 0});
  TwistWord comm;
  comm.push(a).push(b).push(a, -1).push(b, -1);
  EXPECT_TRUE(is_torelli(comm, g));
}

TEST(Relations, Commuting) {
  const Genus g(3);
  EXPECT_TRUE(check_commuting(curve("x1", g, {1, 0, 0, 0, 0, 0}), curve("x2", g, {0, 1, 0, 0, 0, 0})));
  EXPECT_THROW(check_commuting(curve("x1", g, {1, 0, 0, 0, 0, 0}), curve("y1", g, {0, 0, 0, 1, 0, 0})),
               PreconditionError);
}

TEST(Relations, BraidExamples) {
  const Genus g(2);
  const auto x1 = curve("x1", g, {1, 0, 0, 0});
  EXPECT_TRUE(check_braid(x1, curve("y1", g, {0, 0, 1, 0})));
  EXPECT_TRUE(check_braid(x1, curve("b", g, {0, 1, 1, 0})));
  EXPECT_THROW(check_braid(x1, curve("x2", g, {0, 1, 0, 0})), PreconditionError);
}

TEST(Relations, BraidOnRandomPairs) {
  Rng rng(23);
  int tried = 0;
  for (int gi = 2; gi <= 4 && tried < 200; ++gi) {
    for (int n = 0; n < 2000 && tried < 200; ++n) {
      const auto a = testgen::random_primitive(rng, Genus(gi), 2), b = testgen::random_primitive(rng, Genus(gi), 2);
      const Integer p = intersection(a, b);
      if (p != 1 && p != -1) continue;
      ++tried;
      EXPECT_TRUE(check_braid(CurveClass("a", a), CurveClass("b", b)));
    }
  }
  EXPECT_GT(tried, 50);
}

TEST(Relations, StarGenus3) {
  const Genus g(3);
  const auto a1 = curve("a1", g, {1, 0, 0, 0, 0, 0}), a2 = curve("a2", g, {0, 1, 0, 0, 0, 0}),
             a3 = curve("a3", g, {0, 0, 1, 0, 0, 0}), b = curve("b", g, {0, 0, 0, 1, 1, 1});
  const auto d1 = curve("d1", g, {0, 1, -1, 0, 0, 0}), d2 = curve("d2", g, {-1, 0, 1, 0, 0, 0}),
             d3 = curve("d3", g, {1, -1, 0, 0, 0, 0});
  EXPECT_TRUE(check_star(a1, a2, a3, b, d1, d2, d3));
  EXPECT_TRUE(check_star(a2, a3, a1, b, d2, d3, d1));
  EXPECT_TRUE(check_star(a3, a1, a2, b, d3, d1, d2));
  EXPECT_THROW(check_star(a1, a2, a3, b, d1, curve("bad", g, {1, 1, 0, 0, 0, 0}), d3), ConfigurationError);
  EXPECT_THROW(check_star(a1, a2, a3, curve("b'", g, {0, 0, 0, 1, 1, 0}), d1, d2, d3), PreconditionError);
}

TEST(Relations, ChainGenus3) {
  const Genus g(3);
  const auto a1 = curve("a1", g, {1, 0, 0, 0, 0, 0}), a2 = curve("a2", g, {0, 1, 0, 0, 0, 0}),
             b = curve("b", g, {0, 0, 0, 1, 1, 0});
  const auto d1 = curve("d1", g, {-1, 1, 0, 0, 0, 0}), d3 = curve("d3", g, {1, -1, 0, 0, 0, 0});
  EXPECT_TRUE(check_chain(a1, a2, b, d1, d3));
  EXPECT_THROW(check_chain(a1, a2, b, d1, curve("e", g, {1, 0, 0, 0, 0, 0})), ConfigurationError);

  // a1 = a2 forces both boundary classes to vanish.
  const auto zero = curve("z", g, {0, 0, 0, 0, 0, 0});
  EXPECT_TRUE(check_chain(a1, a1, curve("y1", g, {0, 0, 0, 1, 0, 0}), zero, zero));
}

TEST(Action, ConjugationCovariance) {
  // M T_a M^{-1} = T_{M a}
  Rng rng(24);
  for (int gi = 2; gi <= 4; ++gi) {
    const Genus g(gi);
    for (int n = 0; n < 30; ++n) {
      const auto m = word_matrix(testgen::random_twist_word(rng, g, 5), g);
      const auto a = testgen::random_primitive(rng, g);
      EXPECT_EQ(m * transvection(a) * m.inverse(), transvection(m.apply(a)));
    }
  }
}

TEST(Action, FunctionalActionIsContragredient) {
  Rng rng(25);
  const Genus g(3);
  for (int n = 0; n < 30; ++n) {
    const auto m = word_matrix(testgen::random_twist_word(rng, g, 4), g);
    const auto alpha = testgen::random_functional(rng, g);
    const auto c = testgen::random_class(rng, g);
    EXPECT_EQ(act(m, alpha)(m.apply(c)), alpha(c));
  }
}

TEST(Action, ThirdWedgeIsDiagonal) {
  Rng rng(26);
  const Genus g(3);
  for (int n = 0; n < 30; ++n) {
    const auto m = word_matrix(testgen::random_twist_word(rng, g, 3), g);
    const auto a = testgen::random_class(rng, g), b = testgen::random_class(rng, g),
               c = testgen::random_class(rng, g);
    EXPECT_EQ(act(m, wedge3(a, b, c)), wedge3(m.apply(a), m.apply(b), m.apply(c)));
  }
}

TEST(TwistWord, InverseAndPower) {
  const Genus g(2);
  const auto a = curve("a", g, {1, 0, 0, 0}), b = curve("b", g, {0, 0, 1, 0});
  TwistWord w;
  w.push(a).push(b, -1);
  const auto inv = w.inverse();
  ASSERT_EQ(inv.size(), 2u);
  EXPECT_EQ(inv.letters()[0].curve, b);
  EXPECT_EQ(inv.letters()[0].exponent, 1);
  EXPECT_EQ(inv.letters()[1].exponent, -1);
  EXPECT_EQ(w.power(3).size(), 6u);
  EXPECT_EQ(word_matrix(w.power(3), g), word_matrix(w * w * w, g));
  EXPECT_EQ(w.power(-1), inv);
}
