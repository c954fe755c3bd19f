#pragma once

// Johnson homomorphism on products of conjugated point-pushes, the
// section-flux closed form for Hamiltonian pushes, and crossed-homomorphism
// utilities.
//
// A push P_c along a simple closed curve of class c has
//   tau(P_c) = omega ^ c,
// the Sp-equivariant extension of the value omega' ^ x_g for c = x_g (omega
// is Sp-invariant and Sp(2g, Z) is transitive on primitive vectors; the
// x_g ^ y_g term drops out because x_g ^ y_g ^ x_g = 0).

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fluxkit/homology.hpp"
#include "fluxkit/mapping_class.hpp"

namespace fluxkit {

/// psi P_c^e psi^{-1}.
struct ConjugatedPush {
  TwistWord conjugator;
  CurveClass curve;
  int exponent = 1;

  friend bool operator==(const ConjugatedPush&, const ConjugatedPush&) = default;
};

class TorelliWord {
 public:
  TorelliWord() = default;
  explicit TorelliWord(std::vector<ConjugatedPush> letters);

  const std::vector<ConjugatedPush>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }

  /// Appends P_c^e (no conjugator).
  TorelliWord& push(const CurveClass& c, int exponent = 1);
  TorelliWord& push(const TwistWord& conjugator, const CurveClass& c, int exponent = 1);

  TorelliWord inverse() const;
  /// psi w psi^{-1}, letter by letter.
  TorelliWord conjugated_by(const TwistWord& psi) const;

  /// Twist-word form: P_c is the bounding-pair map T_{c.L} T_{c.R}^{-1} of
  /// the two boundary curves of a neighbourhood of c (both of class c).
  TwistWord to_twist_word() const;

  friend TorelliWord operator*(const TorelliWord& a, const TorelliWord& b);

  std::string to_string() const;

 private:
  std::vector<ConjugatedPush> letters_;
};

/// tau of a single unconjugated push: omega ^ c.
ThirdWedge push_johnson(const HomologyClass& c);

/// Sum over letters of e * psi.(omega ^ c), psi acting diagonally on triples.
ThirdWedge johnson(const TorelliWord& w, Genus g);

/// Phi(tau(w)).
HomologyClass contracted_johnson(const TorelliWord& w, Genus g);

/// b -> g * i(a, b). Throws PreconditionError for the zero class.
CohomologyFunctional flsec_push(const CurveClass& a, Genus g);

/// Section flux of a word of Hamiltonian pushes. Each conjugated letter
/// contributes e * psi.Flsec(P_c); the Flsec(psi) terms cancel since the
/// letter is Torelli.
CohomologyFunctional flsec(const TorelliWord& w, Genus g);

/// flsec(w) == g/(g-1) * D^{-1}(Phi(tau(w))), exactly.
bool theorem_a_check(const TorelliWord& w, Genus g);

/// flsec(w) - D^{-1}(Phi(tau(w))).
CohomologyFunctional theorem_b_predict_fljac(const TorelliWord& w, Genus g);

/// Crossed homomorphism on twist words for the module action
/// (phi . alpha)(c) = alpha(phi^{-1} c), evaluated through
///   f(ab) = a.f(b) + f(a).
/// Generator values are stored per (curve name, exponent). A missing inverse
/// value is derived as f(T^{-1}) = -T^{-1}.f(T); a fallback rule, when set,
/// supplies values for letters with no stored entry.
class CrossedHom {
 public:
  using Key = std::pair<std::string, int>;
  using Rule = std::function<CohomologyFunctional(const TwistLetter&)>;

  explicit CrossedHom(Genus g) : genus_(g) {}

  Genus genus() const noexcept { return genus_; }
  void set(const std::string& name, int exponent, CohomologyFunctional value);
  void set_rule(Rule rule) { rule_ = std::move(rule); }
  const std::map<Key, CohomologyFunctional>& values() const noexcept { return values_; }

  /// Value on a single letter. Throws ConfigurationError when undefined.
  CohomologyFunctional letter_value(const TwistLetter& l) const;

  /// Value on the freely reduced word.
  CohomologyFunctional operator()(const TwistWord& w) const;

 private:
  Genus genus_;
  std::map<Key, CohomologyFunctional> values_;
  Rule rule_;
};

/// Cancels adjacent T_c^e T_c^{-e} with equal names and classes.
TwistWord free_reduce(const TwistWord& w);

/// delta kappa(phi) = phi.kappa - kappa.
CrossedHom coboundary(const CohomologyFunctional& kappa);

/// True iff f(ab) == a.f(b) + f(a) for every pair.
bool cocycle_check(const CrossedHom& f, const std::vector<std::pair<TwistWord, TwistWord>>& pairs);

/// Index of the first failing pair, if any.
std::optional<std::size_t> first_cocycle_failure(
    const CrossedHom& f, const std::vector<std::pair<TwistWord, TwistWord>>& pairs);

}  // namespace fluxkit
