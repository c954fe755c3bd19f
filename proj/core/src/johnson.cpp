#include "fluxkit/johnson.hpp"

#include <sstream>

namespace fluxkit {
namespace {

void require_genus(Genus a, Genus b, const char* what) {
  if (a != b) throw DimensionError(std::string(what) + ": genus mismatch");
}

void require_exponent(int e) {
  if (e != 1 && e != -1) throw PreconditionError("push exponent must be +1 or -1");
}

}  // namespace

// --- TorelliWord ------------------------------------------------------------

TorelliWord::TorelliWord(std::vector<ConjugatedPush> letters) : letters_(std::move(letters)) {
  for (const auto& l : letters_) require_exponent(l.exponent);
}

TorelliWord& TorelliWord::push(const CurveClass& c, int exponent) {
  return push(TwistWord{}, c, exponent);
}

TorelliWord& TorelliWord::push(const TwistWord& conjugator, const CurveClass& c, int exponent) {
  require_exponent(exponent);
  letters_.push_back({conjugator, c, exponent});
  return *this;
}

TorelliWord TorelliWord::inverse() const {
  std::vector<ConjugatedPush> out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back({it->conjugator, it->curve, -it->exponent});
  }
  return TorelliWord(std::move(out));
}

TorelliWord TorelliWord::conjugated_by(const TwistWord& psi) const {
  std::vector<ConjugatedPush> out;
  for (const auto& l : letters_) out.push_back({psi * l.conjugator, l.curve, l.exponent});
  return TorelliWord(std::move(out));
}

TwistWord TorelliWord::to_twist_word() const {
  TwistWord out;
  for (const auto& l : letters_) {
    TwistWord p;
    p.push(CurveClass(l.curve.name() + ".L", l.curve.cls()), 1);
    p.push(CurveClass(l.curve.name() + ".R", l.curve.cls()), -1);
    if (l.exponent < 0) p = p.inverse();
    out = out * l.conjugator * p * l.conjugator.inverse();
  }
  return out;
}

TorelliWord operator*(const TorelliWord& a, const TorelliWord& b) {
  std::vector<ConjugatedPush> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return TorelliWord(std::move(out));
}

std::string TorelliWord::to_string() const {
  if (letters_.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const auto& l = letters_[i];
    if (i) out << " ";
    const std::string p = "P_" + l.curve.name() + (l.exponent < 0 ? "^-1" : "");
    if (l.conjugator.empty()) {
      out << p;
    } else {
      out << "(" << l.conjugator.to_string() << ")" << p << "(" << l.conjugator.to_string()
          << ")^-1";
    }
  }
  return out.str();
}

// --- Johnson / flux ---------------------------------------------------------

ThirdWedge push_johnson(const HomologyClass& c) { return wedge(omega(c.genus()), c); }

ThirdWedge johnson(const TorelliWord& w, Genus g) {
  ThirdWedge total(g);
  for (const auto& l : w.letters()) {
    require_genus(g, l.curve.genus(), "johnson");
    ThirdWedge t = act(word_matrix(l.conjugator, g), push_johnson(l.curve.cls()));
    if (l.exponent < 0) total -= t;
    else total += t;
  }
  return total;
}

HomologyClass contracted_johnson(const TorelliWord& w, Genus g) { return contract(johnson(w, g)); }

CohomologyFunctional flsec_push(const CurveClass& a, Genus g) {
  require_genus(g, a.genus(), "flsec_push");
  if (a.cls().is_zero()) throw PreconditionError("push curve " + a.name() + " has zero class");
  return Rational(g.value()) * poincare_dual_inv(a.cls());
}

CohomologyFunctional flsec(const TorelliWord& w, Genus g) {
  CohomologyFunctional total(g);
  for (const auto& l : w.letters()) {
    CohomologyFunctional v = act(word_matrix(l.conjugator, g), flsec_push(l.curve, g));
    if (l.exponent < 0) total -= v;
    else total += v;
  }
  return total;
}

bool theorem_a_check(const TorelliWord& w, Genus g) {
  const Rational coeff(g.value(), g.value() - 1);
  return flsec(w, g) == coeff * poincare_dual_inv(contracted_johnson(w, g));
}

CohomologyFunctional theorem_b_predict_fljac(const TorelliWord& w, Genus g) {
  return flsec(w, g) - poincare_dual_inv(contracted_johnson(w, g));
}

// --- crossed homomorphisms --------------------------------------------------

void CrossedHom::set(const std::string& name, int exponent, CohomologyFunctional value) {
  require_exponent(exponent);
  require_genus(genus_, value.genus(), "CrossedHom::set");
  values_.insert_or_assign(Key{name, exponent}, std::move(value));
}

CohomologyFunctional CrossedHom::letter_value(const TwistLetter& l) const {
  if (auto it = values_.find({l.curve.name(), l.exponent}); it != values_.end()) return it->second;
  if (auto it = values_.find({l.curve.name(), -l.exponent}); it != values_.end()) {
    // 0 = f(T^-1 T) = T^-1.f(T) + f(T^-1)
    return -act(transvection(l.curve, l.exponent), it->second);
  }
  if (rule_) return rule_(l);
  throw ConfigurationError("crossed homomorphism undefined on T_" + l.curve.name());
}

CohomologyFunctional CrossedHom::operator()(const TwistWord& w) const {
  CohomologyFunctional total(genus_);
  SpMatrix prefix = SpMatrix::identity(genus_);
  const TwistWord reduced = free_reduce(w);
  for (const auto& l : reduced.letters()) {
    total += act(prefix, letter_value(l));
    prefix = prefix * transvection(l.curve, l.exponent);
  }
  return total;
}

TwistWord free_reduce(const TwistWord& w) {
  std::vector<TwistLetter> stack;
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back().curve == l.curve && stack.back().exponent == -l.exponent) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return TwistWord(std::move(stack));
}

CrossedHom coboundary(const CohomologyFunctional& kappa) {
  CrossedHom f(kappa.genus());
  f.set_rule([kappa](const TwistLetter& l) {
    return act(transvection(l.curve, l.exponent), kappa) - kappa;
  });
  return f;
}

std::optional<std::size_t> first_cocycle_failure(
    const CrossedHom& f, const std::vector<std::pair<TwistWord, TwistWord>>& pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [a, b] = pairs[i];
    const CohomologyFunctional lhs = f(a * b);
    const CohomologyFunctional rhs = act(word_matrix(a, f.genus()), f(b)) + f(a);
    if (lhs != rhs) return i;
  }
  return std::nullopt;
}

bool cocycle_check(const CrossedHom& f, const std::vector<std::pair<TwistWord, TwistWord>>& pairs) {
  return !first_cocycle_failure(f, pairs).has_value();
}

}  // namespace fluxkit
