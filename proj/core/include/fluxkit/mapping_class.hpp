#pragma once

// Dehn twist words acting on H_1 through symplectic transvections
//   (T_a)_*[b] = [b] + i([b],[a])[a],
// their Sp(2g, Z) matrices, and homology-level checks of the relations in the
// Gervais presentation.
//
// Words are written left to right and composed as maps, so the matrix of
// T_a T_b is M(T_a) * M(T_b): the rightmost letter acts first.

#include <string>
#include <vector>

#include "fluxkit/homology.hpp"

namespace fluxkit {

/// A named simple closed curve known through its homology class. The class
/// is primitive or zero (separating curves).
class CurveClass {
 public:
  CurveClass(std::string name, HomologyClass cls);

  const std::string& name() const noexcept { return name_; }
  const HomologyClass& cls() const noexcept { return cls_; }
  Genus genus() const noexcept { return cls_.genus(); }

  friend bool operator==(const CurveClass&, const CurveClass&) = default;

 private:
  std::string name_;
  HomologyClass cls_;
};

struct TwistLetter {
  CurveClass curve;
  int exponent = 1;  // +1 or -1

  friend bool operator==(const TwistLetter&, const TwistLetter&) = default;
};

class TwistWord {
 public:
  TwistWord() = default;
  explicit TwistWord(std::vector<TwistLetter> letters);

  const std::vector<TwistLetter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  std::size_t size() const noexcept { return letters_.size(); }

  TwistWord& push(const CurveClass& c, int exponent = 1);
  TwistWord inverse() const;
  /// Word repeated n times (n >= 0).
  TwistWord power(int n) const;

  friend TwistWord operator*(const TwistWord& a, const TwistWord& b);
  friend bool operator==(const TwistWord&, const TwistWord&) = default;

  std::string to_string() const;

 private:
  std::vector<TwistLetter> letters_;
};

/// 2g x 2g integer matrix acting on coefficient column vectors.
class SpMatrix {
 public:
  explicit SpMatrix(Genus g);  // zero matrix
  static SpMatrix identity(Genus g);
  /// The Gram matrix of the intersection form in the fixed basis.
  static SpMatrix gram(Genus g);

  Genus genus() const noexcept { return genus_; }
  std::size_t dim() const noexcept { return n_; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }

  SpMatrix transpose() const;
  /// Inverse of a symplectic matrix, -J M^T J. Throws PreconditionError if
  /// the matrix is not symplectic.
  SpMatrix inverse() const;
  bool is_identity() const;

  HomologyClass apply(const HomologyClass& c) const;

  friend SpMatrix operator*(const SpMatrix& a, const SpMatrix& b);
  friend bool operator==(const SpMatrix&, const SpMatrix&) = default;

  std::string to_string() const;

 private:
  Genus genus_;
  std::size_t n_;
  std::vector<Integer> entries_;
};

/// Matrix of b -> b + exponent * i(b, a) a. The zero class gives the identity.
SpMatrix transvection(const HomologyClass& a, int exponent = 1);
SpMatrix transvection(const CurveClass& a, int exponent = 1);

/// Ordered product of the letters' transvections; the empty word is the
/// identity. Genus is needed for that case.
SpMatrix word_matrix(const TwistWord& w, Genus g);

/// M^T J M == J exactly.
bool is_symplectic(const SpMatrix& m);

bool is_torelli(const TwistWord& w, Genus g);

/// Diagonal action on wedge^3: a^b^c -> Ma ^ Mb ^ Mc.
ThirdWedge act(const SpMatrix& m, const ThirdWedge& w);
/// Push-forward of a 2-vector: a^b -> Ma ^ Mb.
SecondWedge act(const SpMatrix& m, const SecondWedge& w);
/// Module action on H^1: (phi . alpha)(c) = alpha(phi^{-1}_* c).
CohomologyFunctional act(const SpMatrix& m, const CohomologyFunctional& alpha);

/// Commuting relation: i(a,b) = 0 => T_a T_b = T_b T_a.
/// Throws PreconditionError when i(a,b) != 0.
bool check_commuting(const CurveClass& a, const CurveClass& b);

/// Braid relation T_c = T_a T_b T_a^{-1} with c = T_a(b).
/// |i(a,b)| = 1 stands in for geometric intersection one; other inputs throw
/// PreconditionError.
bool check_braid(const CurveClass& a, const CurveClass& b);

/// Star relation (T_a1 T_a2 T_a3 T_b)^3 = T_d1 T_d2 T_d3.
/// Requires i(a_k, b) = 1 and i(a_j, a_k) = 0 (PreconditionError otherwise)
/// and, up to orientation, [d3] = [a1]-[a2], [d1] = [a2]-[a3],
/// [d2] = [a3]-[a1] (ConfigurationError otherwise).
bool check_star(const CurveClass& a1, const CurveClass& a2, const CurveClass& a3,
                const CurveClass& b, const CurveClass& d1, const CurveClass& d2,
                const CurveClass& d3);

/// Chain relation (T_a1 T_a2 T_a1 T_b)^3 = T_d1 T_d3: the star relation with
/// a3 = a1 and d2 bounding a disk. Up to orientation [d1] = [a2]-[a1] and
/// [d3] = [a1]-[a2].
bool check_chain(const CurveClass& a1, const CurveClass& a2, const CurveClass& b,
                 const CurveClass& d1, const CurveClass& d3);

}  // namespace fluxkit
