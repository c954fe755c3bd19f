#include "fluxkit/sh1.hpp"

#include <set>
#include <sstream>

namespace fluxkit {
namespace {

// floor(a / b) for b > 0
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

struct LatticeRow {
  std::vector<Integer> v;
  Rational area;

  bool zero() const {
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }
  void axpy(const Integer& q, const LatticeRow& o) {  // this -= q * o
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= q * o.v[k];
    area -= Rational(q) * o.area;
  }
  void negate() {
    for (auto& x : v) x = -x;
    area = -area;
  }
};

}  // namespace

// --- SymbolTable ------------------------------------------------------------

void SymbolTable::add(const std::string& name, HomologyClass cls) {
  if (cls.genus() != genus_) throw DimensionError("symbol " + name + ": genus mismatch");
  if (!classes_.emplace(name, std::move(cls)).second) {
    throw ConfigurationError("duplicate symbol " + name);
  }
}

const HomologyClass& SymbolTable::cls(const std::string& name) const {
  auto it = classes_.find(name);
  if (it == classes_.end()) throw ConfigurationError("unknown symbol " + name);
  return it->second;
}

CurveClass SymbolTable::curve(const std::string& name) const { return CurveClass(name, cls(name)); }

// --- SH1Expr ----------------------------------------------------------------

SH1Expr SH1Expr::symbol(const std::string& name) {
  SH1Expr e;
  e.add(name, 1);
  return e;
}

Integer SH1Expr::coefficient(const std::string& name) const {
  auto it = terms_.find(name);
  return it == terms_.end() ? Integer(0) : it->second;
}

SH1Expr& SH1Expr::add(const std::string& name, const Integer& c) {
  if (c == 0) return *this;
  Integer& slot = terms_[name];
  slot += c;
  if (slot == 0) terms_.erase(name);
  return *this;
}

SH1Expr& SH1Expr::operator+=(const SH1Expr& other) {
  for (const auto& [n, c] : other.terms_) add(n, c);
  return *this;
}

SH1Expr& SH1Expr::operator-=(const SH1Expr& other) {
  for (const auto& [n, c] : other.terms_) add(n, -c);
  return *this;
}

SH1Expr& SH1Expr::operator*=(const Integer& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [n, c] : terms_) c *= s;
  return *this;
}

SH1Expr SH1Expr::operator-() const {
  SH1Expr out = *this;
  out *= -1;
  return out;
}

HomologyClass SH1Expr::homology(const SymbolTable& table) const {
  HomologyClass out(table.genus());
  for (const auto& [n, c] : terms_) out += c * table.cls(n);
  return out;
}

std::string SH1Expr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [n, c] : terms_) {
    if (c == 1) out << (first ? "" : "+");
    else if (c == -1) out << "-";
    else out << (c > 0 && !first ? "+" : "") << c;
    out << "<" << n << ">";
    first = false;
  }
  return out.str();
}

// --- twist action -----------------------------------------------------------

SH1Expr apply_twist(const SymbolTable& table, const SymmetricTwist& t, const SH1Expr& e) {
  if (t.exponent != 1 && t.exponent != -1) throw PreconditionError("twist exponent must be +1 or -1");
  const HomologyClass& a = table.cls(t.symbol);
  Integer shift = 0;
  for (const auto& [n, c] : e.terms()) shift += c * intersection(table.cls(n), a);
  SH1Expr out = e;
  out.add(t.symbol, shift * t.exponent);
  return out;
}

SH1Expr apply_word(const SymbolTable& table, const std::vector<SymmetricTwist>& word,
                   const SH1Expr& e) {
  SH1Expr out = e;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = apply_twist(table, *it, out);
  return out;
}

TwistWord to_twist_word(const SymbolTable& table, const std::vector<SymmetricTwist>& word) {
  TwistWord w;
  for (const auto& t : word) w.push(table.curve(t.symbol), t.exponent);
  return w;
}

// --- lattice reduction ------------------------------------------------------

ReduceResult reduce(const SH1Expr& e, const std::vector<AreaRelation>& rels) {
  std::set<std::string> names;
  for (const auto& [n, c] : e.terms()) names.insert(n);
  for (const auto& r : rels)
    for (const auto& [n, c] : r.lhs.terms()) names.insert(n);
  const std::vector<std::string> cols(names.begin(), names.end());

  auto to_row = [&cols](const SH1Expr& x) {
    std::vector<Integer> v(cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k) v[k] = x.coefficient(cols[k]);
    return v;
  };

  std::vector<LatticeRow> rows;
  rows.reserve(rels.size());
  for (const auto& r : rels) rows.push_back({to_row(r.lhs), r.area});

  // Hermite normal form: pivots positive, entries above a pivot in [0, pivot).
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::size_t top = 0;
  for (std::size_t col = 0; col < cols.size() && top < rows.size(); ++col) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i) {
        if (rows[i].v[col] == 0) continue;
        if (best == rows.size() || abs(rows[i].v[col]) < abs(rows[best].v[col])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i].v[col] == 0) continue;
        rows[i].axpy(rows[i].v[col] / rows[top].v[col], rows[top]);
        if (rows[i].v[col] != 0) done = false;
      }
      if (done) break;
    }
    if (top >= rows.size() || rows[top].v[col] == 0) continue;
    if (rows[top].v[col] < 0) rows[top].negate();
    for (std::size_t i = 0; i < top; ++i) rows[i].axpy(floor_div(rows[i].v[col], rows[top].v[col]), rows[top]);
    pivots.emplace_back(top, col);
    ++top;
  }

  ReduceResult out;
  for (std::size_t i = top; i < rows.size(); ++i) {
    if (rows[i].zero() && rows[i].area != 0) out.kernel_areas.push_back(rows[i].area);
  }

  LatticeRow target{to_row(e), Rational(0)};
  Rational area = 0;
  for (const auto& [r, c] : pivots) {
    const Integer q = floor_div(target.v[c], rows[r].v[c]);
    if (q == 0) continue;
    target.axpy(q, rows[r]);
    area += Rational(q) * rows[r].area;
  }
  for (std::size_t k = 0; k < cols.size(); ++k) out.residual.add(cols[k], target.v[k]);
  if (out.residual.is_zero()) out.area = area;
  return out;
}

// --- certificates -----------------------------------------------------------

std::vector<CertificateEntry> ham_certificate(const SymbolTable& table,
                                              const std::vector<SymmetricTwist>& word,
                                              const std::vector<SH1Expr>& basis,
                                              const std::vector<AreaRelation>& rels) {
  const SpMatrix m = word_matrix(to_twist_word(table, word), table.genus());
  for (const auto& e : basis) {
    const HomologyClass h = e.homology(table);
    if (m.apply(h) != h) {
      throw PreconditionError("word acts nontrivially on the class of " + e.to_string());
    }
  }
  std::vector<CertificateEntry> out;
  out.reserve(basis.size());
  for (const auto& e : basis) {
    SH1Expr diff = apply_word(table, word, e) - e;
    ReduceResult red = reduce(diff, rels);
    out.push_back({e, std::move(diff), std::move(red)});
  }
  return out;
}

bool is_hamiltonian(const std::vector<CertificateEntry>& cert) {
  for (const auto& c : cert) {
    if (!c.flux() || *c.flux() != 0) return false;
  }
  return true;
}

}  // namespace fluxkit
