#pragma once

// Exact symplectic linear algebra on H_1 of a closed genus-g surface.
//
// Coordinates: the symplectic basis x_1..x_g, y_1..y_g is stored as indices
// 0..g-1 (x) followed by g..2g-1 (y). The intersection form has
// i(x_k, y_k) = 1 and every other basis pairing zero. Cohomology classes are
// written in the evaluation-dual basis alpha_k (dual to x_k), beta_k (dual
// to y_k).

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fluxkit/errors.hpp"

namespace fluxkit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Genus of the closed surface; always at least 2.
class Genus {
 public:
  explicit Genus(int g);

  int value() const noexcept { return g_; }
  std::size_t rank() const noexcept { return static_cast<std::size_t>(2 * g_); }

  friend bool operator==(Genus, Genus) = default;

 private:
  int g_;
};

class HomologyClass {
 public:
  explicit HomologyClass(Genus g);
  HomologyClass(Genus g, std::vector<Integer> coeffs);

  /// x_k, 1-based as in the usual notation.
  static HomologyClass x(Genus g, int k);
  /// y_k, 1-based.
  static HomologyClass y(Genus g, int k);
  /// Basis vector by storage index (0..2g-1).
  static HomologyClass basis(Genus g, std::size_t index);

  Genus genus() const noexcept { return genus_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
  Integer& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  /// gcd of the coefficients is 1 (a nonzero class carried by a simple closed
  /// curve must be primitive).
  bool is_primitive() const;

  HomologyClass& operator+=(const HomologyClass& other);
  HomologyClass& operator-=(const HomologyClass& other);
  HomologyClass& operator*=(const Integer& s);
  HomologyClass operator-() const;

  friend HomologyClass operator+(HomologyClass a, const HomologyClass& b) { return a += b; }
  friend HomologyClass operator-(HomologyClass a, const HomologyClass& b) { return a -= b; }
  friend HomologyClass operator*(const Integer& s, HomologyClass a) { return a *= s; }
  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;

  /// Human-readable form such as "x1+2y2"; "0" for the zero class.
  std::string to_string() const;

 private:
  Genus genus_;
  std::vector<Integer> coeffs_;
};

/// Element of Hom(H_1, Q) in the basis {alpha_k, beta_k}.
class CohomologyFunctional {
 public:
  explicit CohomologyFunctional(Genus g);
  CohomologyFunctional(Genus g, std::vector<Rational> coeffs);

  static CohomologyFunctional alpha(Genus g, int k);
  static CohomologyFunctional beta(Genus g, int k);

  Genus genus() const noexcept { return genus_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  Rational operator()(const HomologyClass& c) const;
  bool is_zero() const;

  CohomologyFunctional& operator+=(const CohomologyFunctional& other);
  CohomologyFunctional& operator-=(const CohomologyFunctional& other);
  CohomologyFunctional& operator*=(const Rational& s);
  CohomologyFunctional operator-() const;

  friend CohomologyFunctional operator+(CohomologyFunctional a, const CohomologyFunctional& b) {
    return a += b;
  }
  friend CohomologyFunctional operator-(CohomologyFunctional a, const CohomologyFunctional& b) {
    return a -= b;
  }
  friend CohomologyFunctional operator*(const Rational& s, CohomologyFunctional a) {
    return a *= s;
  }
  friend bool operator==(const CohomologyFunctional&, const CohomologyFunctional&) = default;

  std::string to_string() const;

 private:
  Genus genus_;
  std::vector<Rational> coeffs_;
};

/// H_1 with rational coefficients; the image of poincare_dual.
class RationalHomologyClass {
 public:
  RationalHomologyClass(Genus g, std::vector<Rational> coeffs);
  explicit RationalHomologyClass(const HomologyClass& c);

  Genus genus() const noexcept { return genus_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_integral() const;
  /// Throws PreconditionError when some coefficient is not an integer.
  HomologyClass to_integral() const;

  friend bool operator==(const RationalHomologyClass&, const RationalHomologyClass&) = default;

 private:
  Genus genus_;
  std::vector<Rational> coeffs_;
};

/// Sparse element of wedge^2 H_1, keyed by strictly increasing index pairs.
class SecondWedge {
 public:
  using Key = std::array<std::size_t, 2>;

  explicit SecondWedge(Genus g) : genus_(g) {}

  Genus genus() const noexcept { return genus_; }
  const std::map<Key, Integer>& terms() const noexcept { return terms_; }
  /// Adds coeff * e_i ^ e_j for arbitrary i, j (normalizes order and sign).
  void add(std::size_t i, std::size_t j, const Integer& coeff);
  Integer coefficient(std::size_t i, std::size_t j) const;
  /// Value of the alternating bilinear form obtained by pairing with the
  /// dual basis: <e_i^*^e_j^*, e_i^e_j> = 1.
  Integer pair(const HomologyClass& a, const HomologyClass& b) const;

  friend bool operator==(const SecondWedge&, const SecondWedge&) = default;

 private:
  Genus genus_;
  std::map<Key, Integer> terms_;
};

/// Sparse element of wedge^3 H_1 in strictly increasing triple normal form.
class ThirdWedge {
 public:
  using Key = std::array<std::size_t, 3>;

  explicit ThirdWedge(Genus g) : genus_(g) {}

  Genus genus() const noexcept { return genus_; }
  const std::map<Key, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Adds coeff * e_i ^ e_j ^ e_k; repeated indices contribute nothing.
  void add(std::size_t i, std::size_t j, std::size_t k, const Integer& coeff);
  Integer coefficient(std::size_t i, std::size_t j, std::size_t k) const;

  ThirdWedge& operator+=(const ThirdWedge& other);
  ThirdWedge& operator-=(const ThirdWedge& other);
  ThirdWedge& operator*=(const Integer& s);
  friend ThirdWedge operator+(ThirdWedge a, const ThirdWedge& b) { return a += b; }
  friend ThirdWedge operator-(ThirdWedge a, const ThirdWedge& b) { return a -= b; }
  friend ThirdWedge operator*(const Integer& s, ThirdWedge a) { return a *= s; }
  friend bool operator==(const ThirdWedge&, const ThirdWedge&) = default;

  std::string to_string() const;

 private:
  Genus genus_;
  std::map<Key, Integer> terms_;
};

/// Alternating 3-form on H_1 (an element of wedge^3 H^1), stored on
/// increasing basis triples as its values there.
class ThirdWedgeForm {
 public:
  using Key = ThirdWedge::Key;

  explicit ThirdWedgeForm(Genus g) : genus_(g) {}

  Genus genus() const noexcept { return genus_; }
  const std::map<Key, Rational>& values() const noexcept { return values_; }
  void set(const Key& k, Rational v);
  /// <form, w>: sum over triples of form value times wedge coefficient.
  Rational operator()(const ThirdWedge& w) const;

 private:
  Genus genus_;
  std::map<Key, Rational> values_;
};

// ---------------------------------------------------------------------------

/// Algebraic intersection number. Throws DimensionError on genus mismatch.
Integer intersection(const HomologyClass& a, const HomologyClass& b);

/// Inverse Poincare duality: the functional b -> i(c, b).
/// In coordinates x_j -> beta_j and y_j -> -alpha_j.
CohomologyFunctional poincare_dual_inv(const HomologyClass& c);

/// Poincare duality H^1 -> H_1, two-sided inverse of poincare_dual_inv:
/// alpha_j -> -y_j, beta_j -> x_j.
RationalHomologyClass poincare_dual(const CohomologyFunctional& alpha);

ThirdWedge wedge3(const HomologyClass& a, const HomologyClass& b, const HomologyClass& c);
ThirdWedge wedge(const SecondWedge& w, const HomologyClass& c);

/// The class of the intersection form, sum_k x_k ^ y_k.
SecondWedge omega(Genus g);

/// Contraction wedge^3 H_1 -> H_1,
/// a^b^c -> i(a,b)c + i(b,c)a + i(c,a)b.
HomologyClass contract(const ThirdWedge& w);

/// omega ^ alpha as an alternating 3-form:
/// (omega^alpha)(u,v,w) = i(u,v)alpha(w) + i(v,w)alpha(u) + i(w,u)alpha(v).
ThirdWedgeForm omega_wedge(const CohomologyFunctional& alpha);

/// (<alpha, contract(w)>, <omega ^ alpha, w>). The two entries agree; both are
/// computed so callers can check the adjunction.
std::pair<Rational, Rational> adjoint_pair(const CohomologyFunctional& alpha, const ThirdWedge& w);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

}  // namespace fluxkit
