#pragma once

// Hand-rolled random generators for the property tests. Everything is seeded
// explicitly so failures reproduce.

#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "fluxkit/homology.hpp"
#include "fluxkit/johnson.hpp"
#include "fluxkit/mapping_class.hpp"

namespace fluxkit::testgen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline HomologyClass random_class(Rng& rng, Genus g, int bound = 3) {
  std::vector<Integer> v(g.rank());
  for (auto& c : v) c = uniform(rng, -bound, bound);
  return HomologyClass(g, v);
}

inline HomologyClass random_primitive(Rng& rng, Genus g, int bound = 3) {
  for (;;) {
    HomologyClass c = random_class(rng, g, bound);
    if (c.is_primitive()) return c;
  }
}

inline CohomologyFunctional random_functional(Rng& rng, Genus g) {
  std::vector<Rational> v(g.rank());
  for (auto& c : v) c = Rational(uniform(rng, -9, 9), uniform(rng, 1, 5));
  return CohomologyFunctional(g, v);
}

inline ThirdWedge random_third_wedge(Rng& rng, Genus g, int terms = 4) {
  ThirdWedge w(g);
  const int n = static_cast<int>(g.rank());
  for (int t = 0; t < terms; ++t) {
    const int i = uniform(rng, 0, n - 1), j = uniform(rng, 0, n - 1), k = uniform(rng, 0, n - 1);
    if (i == j || j == k || i == k) continue;
    w.add(i, j, k, uniform(rng, -4, 4));
  }
  return w;
}

inline CurveClass random_curve(Rng& rng, Genus g, const std::string& name, int bound = 2) {
  return CurveClass(name, random_primitive(rng, g, bound));
}

inline TwistWord random_twist_word(Rng& rng, Genus g, int length) {
  TwistWord w;
  for (int i = 0; i < length; ++i) {
    w.push(random_curve(rng, g, "c" + std::to_string(i)), uniform(rng, 0, 1) ? 1 : -1);
  }
  return w;
}

inline TorelliWord random_push_word(Rng& rng, Genus g, int length) {
  TorelliWord w;
  for (int i = 0; i < length; ++i) {
    const CurveClass c = random_curve(rng, g, "p" + std::to_string(i));
    const int e = uniform(rng, 0, 1) ? 1 : -1;
    if (uniform(rng, 0, 1)) {
      w.push(random_twist_word(rng, g, uniform(rng, 1, 3)), c, e);
    } else {
      w.push(c, e);
    }
  }
  return w;
}

}  // namespace fluxkit::testgen
