#include "fluxkit/homology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fluxkit {
namespace {

void require_same(Genus a, Genus b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": genus mismatch (" + std::to_string(a.value()) +
                         " vs " + std::to_string(b.value()) + ")");
  }
}

// Intersection of basis vectors by storage index.
int basis_pairing(std::size_t i, std::size_t j, std::size_t g) {
  if (i < g && j == i + g) return 1;
  if (i >= g && j + g == i) return -1;
  return 0;
}

std::string basis_name(std::size_t i, std::size_t g) {
  return (i < g ? "x" : "y") + std::to_string(i < g ? i + 1 : i - g + 1);
}

template <class T>
std::string linear_combination(const std::vector<T>& coeffs, std::size_t g) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const T& c = coeffs[i];
    if (c == 0) continue;
    std::string name = basis_name(i, g);
    if (c == 1) {
      out << (first ? "" : "+") << name;
    } else if (c == -1) {
      out << "-" << name;
    } else {
      std::string s = to_string(c);
      if (!first && s.front() != '-') out << "+";
      out << s << name;
    }
    first = false;
  }
  return first ? "0" : out.str();
}

// Sign of the permutation sorting three distinct indices, and the sorted key.
int sort_triple(std::size_t& i, std::size_t& j, std::size_t& k) {
  int sign = 1;
  if (i > j) { std::swap(i, j); sign = -sign; }
  if (j > k) { std::swap(j, k); sign = -sign; }
  if (i > j) { std::swap(i, j); sign = -sign; }
  return sign;
}

}  // namespace

std::string to_string(const Integer& v) { return v.str(); }

std::string to_string(const Rational& v) {
  if (boost::multiprecision::denominator(v) == 1) return boost::multiprecision::numerator(v).str();
  return boost::multiprecision::numerator(v).str() + "/" +
         boost::multiprecision::denominator(v).str();
}

Genus::Genus(int g) : g_(g) {
  if (g < 2) throw DimensionError("genus must be at least 2, got " + std::to_string(g));
}

// --- HomologyClass ----------------------------------------------------------

HomologyClass::HomologyClass(Genus g) : genus_(g), coeffs_(g.rank()) {}

HomologyClass::HomologyClass(Genus g, std::vector<Integer> coeffs)
    : genus_(g), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != g.rank()) {
    throw DimensionError("homology class needs " + std::to_string(g.rank()) +
                         " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

HomologyClass HomologyClass::basis(Genus g, std::size_t index) {
  if (index >= g.rank()) throw DimensionError("basis index out of range");
  HomologyClass c(g);
  c.coeffs_[index] = 1;
  return c;
}

HomologyClass HomologyClass::x(Genus g, int k) {
  if (k < 1 || k > g.value()) throw DimensionError("x index out of range");
  return basis(g, static_cast<std::size_t>(k - 1));
}

HomologyClass HomologyClass::y(Genus g, int k) {
  if (k < 1 || k > g.value()) throw DimensionError("y index out of range");
  return basis(g, static_cast<std::size_t>(g.value() + k - 1));
}

bool HomologyClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

bool HomologyClass::is_primitive() const {
  Integer d = 0;
  for (const auto& c : coeffs_) d = boost::multiprecision::gcd(d, c);
  return d == 1;
}

HomologyClass& HomologyClass::operator+=(const HomologyClass& other) {
  require_same(genus_, other.genus_, "homology addition");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

HomologyClass& HomologyClass::operator-=(const HomologyClass& other) {
  require_same(genus_, other.genus_, "homology subtraction");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

HomologyClass& HomologyClass::operator*=(const Integer& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

HomologyClass HomologyClass::operator-() const {
  HomologyClass r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string HomologyClass::to_string() const {
  return linear_combination(coeffs_, static_cast<std::size_t>(genus_.value()));
}

// --- CohomologyFunctional ---------------------------------------------------

CohomologyFunctional::CohomologyFunctional(Genus g) : genus_(g), coeffs_(g.rank()) {}

CohomologyFunctional::CohomologyFunctional(Genus g, std::vector<Rational> coeffs)
    : genus_(g), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != g.rank()) {
    throw DimensionError("cohomology functional needs " + std::to_string(g.rank()) +
                         " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

CohomologyFunctional CohomologyFunctional::alpha(Genus g, int k) {
  if (k < 1 || k > g.value()) throw DimensionError("alpha index out of range");
  CohomologyFunctional f(g);
  f.coeffs_[static_cast<std::size_t>(k - 1)] = 1;
  return f;
}

CohomologyFunctional CohomologyFunctional::beta(Genus g, int k) {
  if (k < 1 || k > g.value()) throw DimensionError("beta index out of range");
  CohomologyFunctional f(g);
  f.coeffs_[static_cast<std::size_t>(g.value() + k - 1)] = 1;
  return f;
}

Rational CohomologyFunctional::operator()(const HomologyClass& c) const {
  require_same(genus_, c.genus(), "functional evaluation");
  Rational sum = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) sum += coeffs_[i] * Rational(c[i]);
  return sum;
}

bool CohomologyFunctional::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

CohomologyFunctional& CohomologyFunctional::operator+=(const CohomologyFunctional& other) {
  require_same(genus_, other.genus_, "functional addition");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CohomologyFunctional& CohomologyFunctional::operator-=(const CohomologyFunctional& other) {
  require_same(genus_, other.genus_, "functional subtraction");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CohomologyFunctional& CohomologyFunctional::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

CohomologyFunctional CohomologyFunctional::operator-() const {
  CohomologyFunctional r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string CohomologyFunctional::to_string() const {
  std::ostringstream out;
  const std::size_t g = static_cast<std::size_t>(genus_.value());
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    std::string name = (i < g ? "a" : "b") + std::to_string(i < g ? i + 1 : i - g + 1);
    std::string s = fluxkit::to_string(coeffs_[i]);
    if (!first && s.front() != '-') out << "+";
    out << s << "*" << name;
    first = false;
  }
  return first ? "0" : out.str();
}

// --- RationalHomologyClass --------------------------------------------------

RationalHomologyClass::RationalHomologyClass(Genus g, std::vector<Rational> coeffs)
    : genus_(g), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != g.rank()) throw DimensionError("rational class has wrong length");
}

RationalHomologyClass::RationalHomologyClass(const HomologyClass& c)
    : genus_(c.genus()), coeffs_(c.coeffs().begin(), c.coeffs().end()) {}

bool RationalHomologyClass::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) {
    return boost::multiprecision::denominator(c) == 1;
  });
}

HomologyClass RationalHomologyClass::to_integral() const {
  if (!is_integral()) throw PreconditionError("rational homology class is not integral");
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(boost::multiprecision::numerator(c));
  return HomologyClass(genus_, std::move(out));
}

// --- wedges -----------------------------------------------------------------

void SecondWedge::add(std::size_t i, std::size_t j, const Integer& coeff) {
  if (i == j || coeff == 0) return;
  Integer c = coeff;
  if (i > j) {
    std::swap(i, j);
    c = -c;
  }
  auto& slot = terms_[{i, j}];
  slot += c;
  if (slot == 0) terms_.erase({i, j});
}

Integer SecondWedge::coefficient(std::size_t i, std::size_t j) const {
  if (i == j) return 0;
  int sign = 1;
  if (i > j) {
    std::swap(i, j);
    sign = -1;
  }
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Integer(0) : Integer(sign * it->second);
}

Integer SecondWedge::pair(const HomologyClass& a, const HomologyClass& b) const {
  require_same(genus_, a.genus(), "2-form pairing");
  require_same(genus_, b.genus(), "2-form pairing");
  Integer sum = 0;
  for (const auto& [key, c] : terms_) {
    const auto [i, j] = key;
    sum += c * (a[i] * b[j] - a[j] * b[i]);
  }
  return sum;
}

void ThirdWedge::add(std::size_t i, std::size_t j, std::size_t k, const Integer& coeff) {
  if (i == j || j == k || i == k || coeff == 0) return;
  const int sign = sort_triple(i, j, k);
  Key key{i, j, k};
  auto& slot = terms_[key];
  slot += sign * coeff;
  if (slot == 0) terms_.erase(key);
}

Integer ThirdWedge::coefficient(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j || j == k || i == k) return 0;
  const int sign = sort_triple(i, j, k);
  auto it = terms_.find({i, j, k});
  return it == terms_.end() ? Integer(0) : Integer(sign * it->second);
}

ThirdWedge& ThirdWedge::operator+=(const ThirdWedge& other) {
  require_same(genus_, other.genus_, "wedge addition");
  for (const auto& [key, c] : other.terms_) add(key[0], key[1], key[2], c);
  return *this;
}

ThirdWedge& ThirdWedge::operator-=(const ThirdWedge& other) {
  require_same(genus_, other.genus_, "wedge subtraction");
  for (const auto& [key, c] : other.terms_) add(key[0], key[1], key[2], -c);
  return *this;
}

ThirdWedge& ThirdWedge::operator*=(const Integer& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= s;
  return *this;
}

std::string ThirdWedge::to_string() const {
  const std::size_t g = static_cast<std::size_t>(genus_.value());
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    std::string s = fluxkit::to_string(c);
    if (!first && s.front() != '-') out << "+";
    if (c == -1) {
      out << "-";
    } else if (c != 1) {
      out << s << "*";
    }
    out << basis_name(key[0], g) << "^" << basis_name(key[1], g) << "^" << basis_name(key[2], g);
    first = false;
  }
  return first ? "0" : out.str();
}

void ThirdWedgeForm::set(const Key& k, Rational v) {
  if (v == 0) {
    values_.erase(k);
  } else {
    values_[k] = std::move(v);
  }
}

Rational ThirdWedgeForm::operator()(const ThirdWedge& w) const {
  require_same(genus_, w.genus(), "3-form pairing");
  Rational sum = 0;
  for (const auto& [key, c] : w.terms()) {
    auto it = values_.find(key);
    if (it != values_.end()) sum += it->second * Rational(c);
  }
  return sum;
}

// --- operations -------------------------------------------------------------

Integer intersection(const HomologyClass& a, const HomologyClass& b) {
  require_same(a.genus(), b.genus(), "intersection");
  const std::size_t g = static_cast<std::size_t>(a.genus().value());
  Integer sum = 0;
  for (std::size_t k = 0; k < g; ++k) sum += a[k] * b[k + g] - a[k + g] * b[k];
  return sum;
}

CohomologyFunctional poincare_dual_inv(const HomologyClass& c) {
  const std::size_t g = static_cast<std::size_t>(c.genus().value());
  CohomologyFunctional f(c.genus());
  for (std::size_t k = 0; k < g; ++k) {
    f[k] = Rational(-c[k + g]);  // value on x_k
    f[k + g] = Rational(c[k]);   // value on y_k
  }
  return f;
}

RationalHomologyClass poincare_dual(const CohomologyFunctional& alpha) {
  const std::size_t g = static_cast<std::size_t>(alpha.genus().value());
  std::vector<Rational> out(2 * g);
  for (std::size_t k = 0; k < g; ++k) {
    out[k] = alpha[k + g];   // beta_k -> x_k
    out[k + g] = -alpha[k];  // alpha_k -> -y_k
  }
  return RationalHomologyClass(alpha.genus(), std::move(out));
}

ThirdWedge wedge3(const HomologyClass& a, const HomologyClass& b, const HomologyClass& c) {
  require_same(a.genus(), b.genus(), "wedge3");
  require_same(a.genus(), c.genus(), "wedge3");
  const std::size_t n = a.size();
  ThirdWedge w(a.genus());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0 || j == i) continue;
      const Integer ab = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (c[k] == 0 || k == i || k == j) continue;
        w.add(i, j, k, ab * c[k]);
      }
    }
  }
  return w;
}

ThirdWedge wedge(const SecondWedge& w2, const HomologyClass& c) {
  require_same(w2.genus(), c.genus(), "wedge");
  ThirdWedge w(c.genus());
  for (const auto& [key, coeff] : w2.terms()) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] != 0) w.add(key[0], key[1], k, coeff * c[k]);
    }
  }
  return w;
}

SecondWedge omega(Genus g) {
  SecondWedge w(g);
  const std::size_t n = static_cast<std::size_t>(g.value());
  for (std::size_t k = 0; k < n; ++k) w.add(k, k + n, 1);
  return w;
}

HomologyClass contract(const ThirdWedge& w) {
  const std::size_t g = static_cast<std::size_t>(w.genus().value());
  HomologyClass out(w.genus());
  for (const auto& [key, c] : w.terms()) {
    const auto [i, j, k] = key;
    out[k] += c * basis_pairing(i, j, g);
    out[i] += c * basis_pairing(j, k, g);
    out[j] += c * basis_pairing(k, i, g);
  }
  return out;
}

ThirdWedgeForm omega_wedge(const CohomologyFunctional& alpha) {
  const std::size_t g = static_cast<std::size_t>(alpha.genus().value());
  const std::size_t n = 2 * g;
  ThirdWedgeForm form(alpha.genus());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Rational v = basis_pairing(i, j, g) * alpha[k] + basis_pairing(j, k, g) * alpha[i] +
                     basis_pairing(k, i, g) * alpha[j];
        form.set({i, j, k}, std::move(v));
      }
    }
  }
  return form;
}

std::pair<Rational, Rational> adjoint_pair(const CohomologyFunctional& alpha, const ThirdWedge& w) {
  require_same(alpha.genus(), w.genus(), "adjoint_pair");
  return {alpha(contract(w)), omega_wedge(alpha)(w)};
}

}  // namespace fluxkit
