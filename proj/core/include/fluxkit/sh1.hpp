#pragma once

// Symbolic strange homology: integer combinations of named cycles, the
// symmetric-twist action
//   (t_a)_* <b> = <b> + i([b],[a]) <a>,
// and reduction modulo a lattice of area-tagged relations.
//
// Areas are exact rationals in the normalization Area(surface) = g.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fluxkit/homology.hpp"
#include "fluxkit/mapping_class.hpp"

namespace fluxkit {

/// Named cycles with their homology classes. Distinct names are distinct
/// cycles even when homologous.
class SymbolTable {
 public:
  explicit SymbolTable(Genus g) : genus_(g) {}

  Genus genus() const noexcept { return genus_; }
  void add(const std::string& name, HomologyClass cls);
  bool contains(const std::string& name) const { return classes_.count(name) != 0; }
  /// Throws ConfigurationError for unknown names.
  const HomologyClass& cls(const std::string& name) const;
  CurveClass curve(const std::string& name) const;
  const std::map<std::string, HomologyClass>& classes() const noexcept { return classes_; }

 private:
  Genus genus_;
  std::map<std::string, HomologyClass> classes_;
};

class SH1Expr {
 public:
  SH1Expr() = default;
  /// The single cycle <name>.
  static SH1Expr symbol(const std::string& name);

  const std::map<std::string, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(const std::string& name) const;

  SH1Expr& add(const std::string& name, const Integer& c);
  SH1Expr& operator+=(const SH1Expr& other);
  SH1Expr& operator-=(const SH1Expr& other);
  SH1Expr& operator*=(const Integer& s);
  SH1Expr operator-() const;
  friend SH1Expr operator+(SH1Expr a, const SH1Expr& b) { return a += b; }
  friend SH1Expr operator-(SH1Expr a, const SH1Expr& b) { return a -= b; }
  friend SH1Expr operator*(const Integer& s, SH1Expr a) { return a *= s; }
  friend bool operator==(const SH1Expr&, const SH1Expr&) = default;

  /// Underlying homology class.
  HomologyClass homology(const SymbolTable& table) const;

  /// e.g. "<x>+<a1>-3<a2>"; "0" when empty.
  std::string to_string() const;

 private:
  std::map<std::string, Integer> terms_;  // no zero coefficients
};

/// lhs bounds a chain of signed area `area`.
struct AreaRelation {
  SH1Expr lhs;
  Rational area;
};

struct SymmetricTwist {
  std::string symbol;
  int exponent = 1;
};

SH1Expr apply_twist(const SymbolTable& table, const SymmetricTwist& t, const SH1Expr& e);

/// Word l_1 ... l_n acts as l_1 o ... o l_n (l_n first).
SH1Expr apply_word(const SymbolTable& table, const std::vector<SymmetricTwist>& word,
                   const SH1Expr& e);

/// Twist word with the symbols' classes, for homology-level checks.
TwistWord to_twist_word(const SymbolTable& table, const std::vector<SymmetricTwist>& word);

struct ReduceResult {
  /// Canonical representative of e modulo the relation lattice; zero iff e
  /// lies in the lattice.
  SH1Expr residual;
  /// Area of a bounding combination when e is in the lattice.
  std::optional<Rational> area;
  /// Nonzero areas carried by combinations of relations with zero boundary.
  /// When non-empty, `area` is only defined modulo these values.
  std::vector<Rational> kernel_areas;
};

/// Integer lattice membership by Hermite normal form over the symbol
/// coordinates, with the area carried along as an extra column.
ReduceResult reduce(const SH1Expr& e, const std::vector<AreaRelation>& rels);

struct CertificateEntry {
  SH1Expr target;
  SH1Expr difference;  // word_* target - target
  ReduceResult reduction;

  /// The flux value: the area when the difference reduces to zero.
  const std::optional<Rational>& flux() const noexcept { return reduction.area; }
};

/// Reduces word_* e - e for every basis expression. Throws PreconditionError
/// if the word's Sp matrix moves the homology class of some basis
/// expression.
std::vector<CertificateEntry> ham_certificate(const SymbolTable& table,
                                              const std::vector<SymmetricTwist>& word,
                                              const std::vector<SH1Expr>& basis,
                                              const std::vector<AreaRelation>& rels);

/// Every flux is present and zero.
bool is_hamiltonian(const std::vector<CertificateEntry>& cert);

}  // namespace fluxkit
