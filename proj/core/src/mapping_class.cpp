#include "fluxkit/mapping_class.hpp"

#include <sstream>

namespace fluxkit {
namespace {

void require_genus(Genus a, Genus b, const char* what) {
  if (a != b) throw DimensionError(std::string(what) + ": genus mismatch");
}

bool equal_up_to_sign(const HomologyClass& a, const HomologyClass& b) {
  return a == b || a == -b;
}

void require_constraint(const CurveClass& d, const HomologyClass& expected) {
  if (!equal_up_to_sign(d.cls(), expected)) {
    throw ConfigurationError("curve " + d.name() + " has class " + d.cls().to_string() +
                             ", expected +/-(" + expected.to_string() + ")");
  }
}

void require_pairing(const CurveClass& a, const CurveClass& b, int value) {
  if (intersection(a.cls(), b.cls()) != value) {
    throw PreconditionError("need i(" + a.name() + ", " + b.name() + ") = " +
                            std::to_string(value));
  }
}

}  // namespace

// --- CurveClass / TwistWord -------------------------------------------------

CurveClass::CurveClass(std::string name, HomologyClass cls)
    : name_(std::move(name)), cls_(std::move(cls)) {
  if (!cls_.is_zero() && !cls_.is_primitive()) {
    throw ConfigurationError("curve " + name_ + " has non-primitive class " + cls_.to_string());
  }
}

TwistWord::TwistWord(std::vector<TwistLetter> letters) : letters_(std::move(letters)) {
  for (const auto& l : letters_) {
    if (l.exponent != 1 && l.exponent != -1) {
      throw PreconditionError("twist exponent must be +1 or -1");
    }
  }
}

TwistWord& TwistWord::push(const CurveClass& c, int exponent) {
  if (exponent != 1 && exponent != -1) throw PreconditionError("twist exponent must be +1 or -1");
  letters_.push_back({c, exponent});
  return *this;
}

TwistWord TwistWord::inverse() const {
  std::vector<TwistLetter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back({it->curve, -it->exponent});
  }
  return TwistWord(std::move(out));
}

TwistWord TwistWord::power(int n) const {
  if (n < 0) return inverse().power(-n);
  std::vector<TwistLetter> out;
  out.reserve(letters_.size() * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
  return TwistWord(std::move(out));
}

TwistWord operator*(const TwistWord& a, const TwistWord& b) {
  std::vector<TwistLetter> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return TwistWord(std::move(out));
}

std::string TwistWord::to_string() const {
  if (letters_.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out << " ";
    out << "T_" << letters_[i].curve.name();
    if (letters_[i].exponent < 0) out << "^-1";
  }
  return out.str();
}

// --- SpMatrix ---------------------------------------------------------------

SpMatrix::SpMatrix(Genus g) : genus_(g), n_(g.rank()), entries_(n_ * n_) {}

SpMatrix SpMatrix::identity(Genus g) {
  SpMatrix m(g);
  for (std::size_t i = 0; i < m.n_; ++i) m(i, i) = 1;
  return m;
}

SpMatrix SpMatrix::gram(Genus g) {
  SpMatrix m(g);
  const std::size_t h = static_cast<std::size_t>(g.value());
  for (std::size_t k = 0; k < h; ++k) {
    m(k, k + h) = 1;
    m(k + h, k) = -1;
  }
  return m;
}

SpMatrix SpMatrix::transpose() const {
  SpMatrix t(genus_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

SpMatrix SpMatrix::inverse() const {
  if (!is_symplectic(*this)) throw PreconditionError("inverse requested for non-symplectic matrix");
  const SpMatrix j = gram(genus_);
  SpMatrix inv = j * transpose() * j;
  for (auto& e : inv.entries_) e = -e;
  return inv;
}

bool SpMatrix::is_identity() const { return *this == identity(genus_); }

HomologyClass SpMatrix::apply(const HomologyClass& c) const {
  require_genus(genus_, c.genus(), "matrix action");
  HomologyClass out(genus_);
  for (std::size_t r = 0; r < n_; ++r) {
    Integer s = 0;
    for (std::size_t k = 0; k < n_; ++k) {
      if (c[k] != 0) s += (*this)(r, k) * c[k];
    }
    out[r] = s;
  }
  return out;
}

SpMatrix operator*(const SpMatrix& a, const SpMatrix& b) {
  require_genus(a.genus_, b.genus_, "matrix product");
  SpMatrix out(a.genus_);
  const std::size_t n = a.n_;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Integer& ark = a(r, k);
      if (ark == 0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (b(k, c) != 0) out(r, c) += ark * b(k, c);
      }
    }
  }
  return out;
}

std::string SpMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t r = 0; r < n_; ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < n_; ++c) out << (c ? ", " : "") << (*this)(r, c);
    out << "]";
  }
  out << "]";
  return out.str();
}

// --- operations -------------------------------------------------------------

SpMatrix transvection(const HomologyClass& a, int exponent) {
  const Genus g = a.genus();
  SpMatrix m = SpMatrix::identity(g);
  // column j is the image of e_j: e_j + exponent * i(e_j, a) a
  for (std::size_t j = 0; j < m.dim(); ++j) {
    const Integer ija = intersection(HomologyClass::basis(g, j), a) * exponent;
    if (ija == 0) continue;
    for (std::size_t r = 0; r < m.dim(); ++r) m(r, j) += ija * a[r];
  }
  return m;
}

SpMatrix transvection(const CurveClass& a, int exponent) { return transvection(a.cls(), exponent); }

SpMatrix word_matrix(const TwistWord& w, Genus g) {
  SpMatrix m = SpMatrix::identity(g);
  for (const auto& l : w.letters()) {
    require_genus(g, l.curve.genus(), "word_matrix");
    m = m * transvection(l.curve, l.exponent);
  }
  return m;
}

bool is_symplectic(const SpMatrix& m) {
  const SpMatrix j = SpMatrix::gram(m.genus());
  return m.transpose() * j * m == j;
}

bool is_torelli(const TwistWord& w, Genus g) { return word_matrix(w, g).is_identity(); }

ThirdWedge act(const SpMatrix& m, const ThirdWedge& w) {
  require_genus(m.genus(), w.genus(), "action on wedge^3");
  const Genus g = m.genus();
  std::vector<HomologyClass> images;
  images.reserve(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) images.push_back(m.apply(HomologyClass::basis(g, i)));
  ThirdWedge out(g);
  for (const auto& [key, c] : w.terms()) {
    ThirdWedge t = wedge3(images[key[0]], images[key[1]], images[key[2]]);
    t *= c;
    out += t;
  }
  return out;
}

SecondWedge act(const SpMatrix& m, const SecondWedge& w) {
  require_genus(m.genus(), w.genus(), "action on wedge^2");
  const Genus g = m.genus();
  SecondWedge out(g);
  for (const auto& [key, c] : w.terms()) {
    const HomologyClass a = m.apply(HomologyClass::basis(g, key[0]));
    const HomologyClass b = m.apply(HomologyClass::basis(g, key[1]));
    for (std::size_t i = 0; i < m.dim(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < m.dim(); ++j) {
        if (b[j] != 0) out.add(i, j, c * a[i] * b[j]);
      }
    }
  }
  return out;
}

CohomologyFunctional act(const SpMatrix& m, const CohomologyFunctional& alpha) {
  require_genus(m.genus(), alpha.genus(), "action on H^1");
  const SpMatrix inv = m.inverse();
  CohomologyFunctional out(m.genus());
  // (alpha . M^{-1})_c = sum_r alpha_r M^{-1}(r, c)
  for (std::size_t c = 0; c < m.dim(); ++c) {
    Rational s = 0;
    for (std::size_t r = 0; r < m.dim(); ++r) {
      if (inv(r, c) != 0) s += alpha[r] * Rational(inv(r, c));
    }
    out[c] = s;
  }
  return out;
}

bool check_commuting(const CurveClass& a, const CurveClass& b) {
  require_pairing(a, b, 0);
  const SpMatrix ta = transvection(a);
  const SpMatrix tb = transvection(b);
  return ta * tb == tb * ta;
}

bool check_braid(const CurveClass& a, const CurveClass& b) {
  const Integer i = intersection(a.cls(), b.cls());
  if (i != 1 && i != -1) {
    throw PreconditionError("braid relation needs |i(" + a.name() + ", " + b.name() + ")| = 1");
  }
  const SpMatrix ta = transvection(a);
  const HomologyClass c = ta.apply(b.cls());
  return transvection(c) == ta * transvection(b) * transvection(a, -1);
}

bool check_star(const CurveClass& a1, const CurveClass& a2, const CurveClass& a3,
                const CurveClass& b, const CurveClass& d1, const CurveClass& d2,
                const CurveClass& d3) {
  const Genus g = a1.genus();
  for (const CurveClass* c : {&a2, &a3, &b, &d1, &d2, &d3}) require_genus(g, c->genus(), "star");
  require_pairing(a1, b, 1);
  require_pairing(a2, b, 1);
  require_pairing(a3, b, 1);
  require_pairing(a1, a2, 0);
  require_pairing(a2, a3, 0);
  require_pairing(a1, a3, 0);
  require_constraint(d3, a1.cls() - a2.cls());
  require_constraint(d1, a2.cls() - a3.cls());
  require_constraint(d2, a3.cls() - a1.cls());

  TwistWord step;
  step.push(a1).push(a2).push(a3).push(b);
  TwistWord boundary;
  boundary.push(d1).push(d2).push(d3);
  return word_matrix(step.power(3), g) == word_matrix(boundary, g);
}

bool check_chain(const CurveClass& a1, const CurveClass& a2, const CurveClass& b,
                 const CurveClass& d1, const CurveClass& d3) {
  const Genus g = a1.genus();
  for (const CurveClass* c : {&a2, &b, &d1, &d3}) require_genus(g, c->genus(), "chain");
  require_pairing(a1, b, 1);
  require_pairing(a2, b, 1);
  require_pairing(a1, a2, 0);
  require_constraint(d1, a2.cls() - a1.cls());
  require_constraint(d3, a1.cls() - a2.cls());

  TwistWord step;
  step.push(a1).push(a2).push(a1).push(b);
  TwistWord boundary;
  boundary.push(d1).push(d3);
  return word_matrix(step.power(3), g) == word_matrix(boundary, g);
}

}  // namespace fluxkit
