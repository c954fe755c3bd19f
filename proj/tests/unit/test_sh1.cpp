#include <gtest/gtest.h>

#include <map>

#include "fluxkit/sh1.hpp"
#include "generators.hpp"

using namespace fluxkit;
using fluxkit::testgen::Rng;

namespace {

HomologyClass cls(Genus g, std::vector<int> v) {
  std::vector<Integer> c(v.begin(), v.end());
  return HomologyClass(g, c);
}

SH1Expr sym(const std::string& s) { return SH1Expr::symbol(s); }

SH1Expr expr(std::map<std::string, int> terms) {
  SH1Expr e;
  for (const auto& [k, v] : terms) e.add(k, v);
  return e;
}

std::vector<SymmetricTwist> word(std::vector<std::pair<std::string, int>> letters) {
  std::vector<SymmetricTwist> w;
  for (auto& [s, e] : letters) w.push_back({s, e});
  return w;
}

std::vector<SymmetricTwist> repeat(const std::vector<SymmetricTwist>& w, int n) {
  std::vector<SymmetricTwist> out;
  for (int i = 0; i < n; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

// a = y1, b = x1, c = x1 + y1: i(b,a) = i(c,a) = i(b,c) = 1.
SymbolTable braid_table() {
  const Genus g(2);
  SymbolTable t(g);
  t.add("a", cls(g, {0, 0, 1, 0}));
  t.add("b", cls(g, {1, 0, 0, 0}));
  t.add("c", cls(g, {1, 0, 1, 0}));
  return t;
}

SymbolTable star_table() {
  const Genus g(3);
  SymbolTable t(g);
  t.add("a1", cls(g, {1, 0, 0, 0, 0, 0}));
  t.add("a2", cls(g, {0, 1, 0, 0, 0, 0}));
  t.add("a3", cls(g, {0, 0, 1, 0, 0, 0}));
  t.add("b", cls(g, {0, 0, 0, 1, 1, 1}));
  t.add("d1", cls(g, {0, 1, -1, 0, 0, 0}));
  t.add("d2", cls(g, {-1, 0, 1, 0, 0, 0}));
  t.add("d3", cls(g, {1, -1, 0, 0, 0, 0}));
  t.add("x", cls(g, {0, 0, 0, 0, 1, 0}));
  t.add("y", cls(g, {0, 0, 0, 0, 0, 1}));
  t.add("z", cls(g, {0, 0, 0, 1, 0, 0}));
  return t;
}

const auto kStarCube = repeat(word({{"a1", 1}, {"a2", 1}, {"a3", 1}, {"b", 1}}), 3);

}  // namespace

TEST(SymbolTable, UnknownNameThrows) {
  const auto t = braid_table();
  EXPECT_TRUE(t.contains("a"));
  EXPECT_THROW(t.cls("q"), ConfigurationError);
  EXPECT_THROW(apply_twist(t, {"q", 1}, sym("a")), ConfigurationError);
}

TEST(SH1Expr, ArithmeticAndDisplay) {
  auto e = sym("x") + Integer(2) * sym("a1");
  EXPECT_EQ(e.coefficient("a1"), 2);
  EXPECT_EQ(e.to_string(), "2<a1>+<x>");
  EXPECT_TRUE((e - e).is_zero());
  EXPECT_EQ((e - e).to_string(), "0");
  EXPECT_EQ((-sym("b")).to_string(), "-<b>");
}

TEST(ApplyTwist, DefiningRule) {
  const auto t = braid_table();
  EXPECT_EQ(apply_twist(t, {"a", 1}, sym("b")), sym("b") + sym("a"));
  EXPECT_EQ(apply_twist(t, {"a", 1}, sym("a")), sym("a"));
  EXPECT_EQ(apply_twist(t, {"a", -1}, sym("b")), sym("b") - sym("a"));
}

TEST(ApplyTwist, InversePairIsIdentity) {
  Rng rng(41);
  const auto t = star_table();
  std::vector<std::string> names;
  for (const auto& [n, c] : t.classes()) names.push_back(n);
  for (int k = 0; k < 50; ++k) {
    SH1Expr e;
    for (const auto& n : names) e.add(n, testgen::uniform(rng, -3, 3));
    const auto& s = names[testgen::uniform(rng, 0, static_cast<int>(names.size()) - 1)];
    EXPECT_EQ(apply_twist(t, {s, 1}, apply_twist(t, {s, -1}, e)), e);
    EXPECT_EQ(apply_word(t, word({{s, 1}, {s, -1}}), e), e);
  }
}

TEST(ApplyWord, BraidWordOnA) {
  const auto t = braid_table();
  const auto w = word({{"c", -1}, {"a", 1}, {"b", 1}, {"a", -1}});
  EXPECT_EQ(apply_word(t, w, sym("a")), sym("c") - sym("b"));
}

TEST(ApplyWord, StarCubeOnCycles) {
  const auto t = star_table();
  // x meets a2 only: <x> + <a1> + <a2> + <a3> - 3<a2>
  const auto img = apply_word(t, kStarCube, sym("x"));
  EXPECT_EQ(img, sym("x") + sym("a1") + sym("a2") + sym("a3") - Integer(3) * sym("a2"));
  EXPECT_EQ(img.to_string(), "<a1>-2<a2>+<a3>+<x>");
  EXPECT_EQ(apply_word(t, kStarCube, sym("a1")), sym("a1"));
  EXPECT_EQ(apply_word(t, kStarCube, sym("b")), sym("b"));
}

TEST(ApplyWord, LinearAndCommutesWithHomology) {
  Rng rng(42);
  const auto t = star_table();
  std::vector<std::string> names;
  for (const auto& [n, c] : t.classes()) names.push_back(n);
  auto random_expr = [&] {
    SH1Expr e;
    for (const auto& n : names) e.add(n, testgen::uniform(rng, -2, 2));
    return e;
  };
  for (int k = 0; k < 40; ++k) {
    std::vector<SymmetricTwist> w;
    for (int i = 0; i < 5; ++i)
      w.push_back({names[testgen::uniform(rng, 0, static_cast<int>(names.size()) - 1)], testgen::uniform(rng, 0, 1) ? 1 : -1});
    const auto e1 = random_expr(), e2 = random_expr();
    const Integer s = testgen::uniform(rng, -3, 3);
    EXPECT_EQ(apply_word(t, w, e1 + s * e2), apply_word(t, w, e1) + s * apply_word(t, w, e2));
    const auto m = word_matrix(to_twist_word(t, w), t.genus());
    EXPECT_EQ(apply_word(t, w, e1).homology(t), m.apply(e1.homology(t)));
  }
}

TEST(Reduce, InLatticeExamples) {
  const auto e = sym("c") - sym("a") - sym("b");
  const auto r = reduce(e, {{e, 0}});
  EXPECT_TRUE(r.residual.is_zero());
  ASSERT_TRUE(r.area.has_value());
  EXPECT_EQ(*r.area, 0);

  // Star difference: D2 - D1 with equal areas.
  const std::vector<AreaRelation> rels = {
      {expr({{"a1", -1}, {"a2", 1}, {"d3", 1}}), Rational(3, 4)},
      {expr({{"a2", -1}, {"a3", 1}, {"d1", 1}}), Rational(3, 4)},
  };
  const auto s = reduce(expr({{"a1", 1}, {"a2", -2}, {"a3", 1}, {"d1", 1}, {"d3", -1}}), rels);
  EXPECT_TRUE(s.residual.is_zero());
  EXPECT_EQ(s.area, std::optional<Rational>(0));
}

TEST(Reduce, Genus2ChainAreaIsTwo) {
  const std::vector<AreaRelation> rels = {
      {expr({{"d1", 1}, {"d3", 1}}), 0},
      {expr({{"a1", 1}, {"a2", -1}, {"d1", 1}}), 1},
  };
  const auto r = reduce(expr({{"a1", 2}, {"a2", -2}, {"d1", 1}, {"d3", -1}}), rels);
  EXPECT_TRUE(r.residual.is_zero());
  EXPECT_EQ(r.area, std::optional<Rational>(2));
}

TEST(Reduce, OutsideLatticeHasResidual) {
  const std::vector<AreaRelation> rels = {{Integer(2) * sym("a"), 1}};
  const auto r = reduce(sym("a"), rels);
  EXPECT_FALSE(r.residual.is_zero());
  EXPECT_FALSE(r.area.has_value());
  EXPECT_EQ(reduce(Integer(4) * sym("a"), rels).area, std::optional<Rational>(2));
}

TEST(Reduce, KernelAreasReported) {
  const std::vector<AreaRelation> rels = {{sym("a"), 1}, {sym("a"), 2}};
  const auto r = reduce(sym("a"), rels);
  EXPECT_TRUE(r.residual.is_zero());
  ASSERT_FALSE(r.kernel_areas.empty());
  EXPECT_EQ(abs(r.kernel_areas.front()), 1);
  EXPECT_TRUE(reduce(sym("a"), {{sym("a"), 1}}).kernel_areas.empty());
}

TEST(Reduce, MatchesBruteForceEnumeration) {
  // Lattice of index 3 in Z^2 spanned by 2a + b and a - b.
  const std::vector<AreaRelation> rels = {
      {expr({{"a", 2}, {"b", 1}}), Rational(1, 3)},
      {expr({{"a", 1}, {"b", -1}}), Rational(5, 7)},
  };
  std::map<std::pair<int, int>, Rational> reachable;
  for (int k1 = -12; k1 <= 12; ++k1)
    for (int k2 = -12; k2 <= 12; ++k2)
      reachable[{2 * k1 + k2, k1 - k2}] = k1 * rels[0].area + k2 * rels[1].area;

  for (int ca = -4; ca <= 4; ++ca) {
    for (int cb = -4; cb <= 4; ++cb) {
      const auto r = reduce(expr({{"a", ca}, {"b", cb}}), rels);
      const auto it = reachable.find({ca, cb});
      if (it == reachable.end()) {
        EXPECT_FALSE(r.residual.is_zero()) << ca << "," << cb;
      } else {
        EXPECT_TRUE(r.residual.is_zero()) << ca << "," << cb;
        EXPECT_EQ(r.area, std::optional<Rational>(it->second)) << ca << "," << cb;
      }
    }
  }
}

TEST(Reduce, RandomCombinationsCarryArea) {
  Rng rng(43);
  const std::vector<AreaRelation> rels = {
      {expr({{"a", 1}, {"b", 2}, {"c", -1}}), Rational(1, 2)},
      {expr({{"b", 3}, {"d", 1}}), Rational(-2, 3)},
      {expr({{"c", 1}, {"d", -1}, {"e", 5}}), 4},
  };
  for (int n = 0; n < 100; ++n) {
    SH1Expr e;
    Rational area = 0;
    for (const auto& r : rels) {
      const int k = testgen::uniform(rng, -4, 4);
      e += Integer(k) * r.lhs;
      area += k * r.area;
    }
    const auto red = reduce(e, rels);
    EXPECT_TRUE(red.residual.is_zero());
    EXPECT_EQ(red.area, std::optional<Rational>(area));
    EXPECT_FALSE(reduce(e + sym("f"), rels).residual.is_zero());
  }
}

TEST(Certificate, BraidLiftIsHamiltonian) {
  const auto t = braid_table();
  const auto w = word({{"c", -1}, {"a", 1}, {"b", 1}, {"a", -1}});
  const auto cert = ham_certificate(t, w, {sym("a"), sym("b"), sym("c")}, {{sym("c") - sym("a") - sym("b"), 0}});
  EXPECT_TRUE(is_hamiltonian(cert));
  EXPECT_EQ(cert.size(), 3u);
}

TEST(Certificate, StarLiftIsHamiltonian) {
  const auto t = star_table();
  auto w = word({{"d1", -1}, {"d2", -1}, {"d3", -1}});
  w.insert(w.end(), kStarCube.begin(), kStarCube.end());
  const std::vector<AreaRelation> rels = {
      {expr({{"a1", -1}, {"a2", 1}, {"d3", 1}}), Rational(3, 4)},
      {expr({{"a2", -1}, {"a3", 1}, {"d1", 1}}), Rational(3, 4)},
      {expr({{"a1", 1}, {"a3", -1}, {"d2", 1}}), Rational(3, 4)},
  };
  std::vector<SH1Expr> basis;
  for (const char* s : {"a1", "a2", "a3", "b", "x", "y", "z"}) basis.push_back(sym(s));
  const auto cert = ham_certificate(t, w, basis, rels);
  EXPECT_TRUE(is_hamiltonian(cert));
  for (const auto& c : cert) EXPECT_EQ(c.flux(), std::optional<Rational>(0)) << c.target.to_string();

  // Dropping a relation leaves a difference that no longer reduces.
  const auto partial = ham_certificate(t, w, basis, {rels[0]});
  EXPECT_FALSE(is_hamiltonian(partial));
}

TEST(Certificate, ChainLiftGenus3IsHamiltonian) {
  const Genus g(3);
  SymbolTable t(g);
  t.add("a1", cls(g, {1, 0, 0, 0, 0, 0}));
  t.add("a2", cls(g, {0, 1, 0, 0, 0, 0}));
  t.add("b", cls(g, {0, 0, 0, 1, 1, 0}));
  t.add("d1", cls(g, {-1, 1, 0, 0, 0, 0}));
  t.add("d3", cls(g, {1, -1, 0, 0, 0, 0}));
  t.add("x", cls(g, {0, 0, 0, 0, 1, 0}));
  t.add("z", cls(g, {0, 0, 0, 1, 0, 0}));
  auto w = word({{"d1", -1}, {"d3", -1}});
  const auto cube = repeat(word({{"a1", 1}, {"a2", 1}, {"a1", 1}, {"b", 1}}), 3);
  w.insert(w.end(), cube.begin(), cube.end());
  const std::vector<AreaRelation> rels = {
      {expr({{"a1", -1}, {"a2", 1}, {"d3", 1}}), Rational(3, 4)},
      {expr({{"a1", 1}, {"a2", -1}, {"d1", 1}}), Rational(3, 4)},
  };
  std::vector<SH1Expr> basis;
  for (const char* s : {"a1", "a2", "b", "x", "z"}) basis.push_back(sym(s));
  EXPECT_TRUE(is_hamiltonian(ham_certificate(t, w, basis, rels)));
}

TEST(Certificate, Genus2ChainHasFluxTwo) {
  const Genus g(2);
  SymbolTable t(g);
  t.add("a1", cls(g, {1, 0, 0, 0}));
  t.add("a2", cls(g, {1, 1, 0, 0}));
  t.add("b", cls(g, {0, 0, 1, 0}));
  t.add("x", cls(g, {0, 0, 0, 1}));
  t.add("d1", cls(g, {0, 1, 0, 0}));
  t.add("d3", cls(g, {0, -1, 0, 0}));
  auto w = word({{"d1", -1}, {"d3", -1}});
  const auto cube = repeat(word({{"a1", 1}, {"a2", 1}, {"a1", 1}, {"b", 1}}), 3);
  w.insert(w.end(), cube.begin(), cube.end());
  const std::vector<AreaRelation> rels = {
      {expr({{"d1", 1}, {"d3", 1}}), 0},
      {expr({{"a1", 1}, {"a2", -1}, {"d1", 1}}), 1},
  };
  const auto cert = ham_certificate(t, w, {sym("x")}, rels);
  ASSERT_EQ(cert.size(), 1u);
  EXPECT_EQ(cert[0].difference, expr({{"a1", 2}, {"a2", -2}, {"d1", 1}, {"d3", -1}}));
  EXPECT_EQ(cert[0].flux(), std::optional<Rational>(2));
  EXPECT_FALSE(is_hamiltonian(cert));
}

TEST(Certificate, NonTorelliWordIsRefused) {
  const auto t = braid_table();
  EXPECT_THROW(ham_certificate(t, word({{"a", 1}}), {sym("b")}, {}), PreconditionError);
}
