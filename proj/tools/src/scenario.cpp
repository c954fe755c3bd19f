#include "fluxkit_cli/scenario.hpp"

#include <limits>

namespace fluxkit::cli {
namespace {

std::string describe(const json& j) {
  std::string s = j.dump();
  if (s.size() > 60) s = s.substr(0, 57) + "...";
  return s;
}

int parse_exponent(const json& j, const std::string& key) {
  if (!j.contains(key)) return 1;
  const int e = get_int(j, key);
  if (e != 1 && e != -1) throw SchemaError("'" + key + "' must be 1 or -1");
  return e;
}

const CurveClass& lookup(const CurveTable& curves, const std::string& name) {
  auto it = curves.find(name);
  if (it == curves.end()) throw SchemaError("unknown curve '" + name + "'");
  return it->second;
}

}  // namespace

const json& field(const json& j, const std::string& key) {
  if (!j.is_object()) throw SchemaError("expected an object, got " + describe(j));
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError("missing field '" + key + "'");
  return *it;
}

int get_int(const json& j, const std::string& key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw SchemaError("field '" + key + "' must be an integer");
  const auto x = v.get<long long>();
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
    throw SchemaError("field '" + key + "' out of range");
  }
  return static_cast<int>(x);
}

double get_double(const json& j, const std::string& key) {
  const json& v = field(j, key);
  if (!v.is_number()) throw SchemaError("field '" + key + "' must be a number");
  return v.get<double>();
}

std::string get_string(const json& j, const std::string& key) {
  const json& v = field(j, key);
  if (!v.is_string()) throw SchemaError("field '" + key + "' must be a string");
  return v.get<std::string>();
}

Integer parse_integer(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw SchemaError("expected an integer, got " + describe(j));
}

Rational parse_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    try {
      const auto slash = s.find('/');
      if (slash == std::string::npos) return Rational(Integer(s));
      const Integer den(s.substr(slash + 1));
      if (den == 0) throw SchemaError("zero denominator in '" + s + "'");
      return Rational(Integer(s.substr(0, slash)), den);
    } catch (const SchemaError&) {
      throw;
    } catch (const std::exception&) {
    }
  }
  throw SchemaError("expected an exact rational (integer or \"p/q\"), got " + describe(j));
}

Genus parse_genus(const json& scenario) {
  const int g = get_int(scenario, "genus");
  if (g < 2) throw SchemaError("genus must be at least 2");
  return Genus(g);
}

HomologyClass parse_class(Genus g, const json& j) {
  if (!j.is_array() || j.size() != g.rank()) {
    throw SchemaError("class must be an array of " + std::to_string(g.rank()) + " integers, got " +
                      describe(j));
  }
  std::vector<Integer> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(parse_integer(c));
  return HomologyClass(g, std::move(coeffs));
}

CurveTable parse_curves(Genus g, const json& arr) {
  if (!arr.is_array()) throw SchemaError("'curves' must be an array");
  CurveTable out;
  for (const auto& c : arr) {
    const std::string name = get_string(c, "name");
    try {
      if (!out.emplace(name, CurveClass(name, parse_class(g, field(c, "class")))).second) {
        throw SchemaError("duplicate curve '" + name + "'");
      }
    } catch (const ConfigurationError& e) {
      throw SchemaError(e.what());
    }
  }
  return out;
}

TwistWord parse_word(const CurveTable& curves, const json& arr) {
  if (!arr.is_array()) throw SchemaError("twist word must be an array");
  TwistWord w;
  for (const auto& l : arr) w.push(lookup(curves, get_string(l, "curve")), parse_exponent(l, "exp"));
  return w;
}

TorelliWord parse_torelli_word(const CurveTable& curves, const json& arr) {
  if (!arr.is_array()) throw SchemaError("'torelli_word' must be an array");
  TorelliWord w;
  for (const auto& l : arr) {
    const TwistWord psi = l.contains("conjugator") ? parse_word(curves, l.at("conjugator")) : TwistWord{};
    const CurveClass& c = lookup(curves, get_string(l, "push"));
    if (c.cls().is_zero()) throw SchemaError("push curve '" + c.name() + "' has zero class");
    w.push(psi, c, parse_exponent(l, "exp"));
  }
  return w;
}

SymbolTable parse_symbols(Genus g, const json& arr) {
  if (!arr.is_array()) throw SchemaError("'symbols' must be an array");
  SymbolTable t(g);
  for (const auto& s : arr) {
    const std::string name = get_string(s, "name");
    if (t.contains(name)) throw SchemaError("duplicate symbol '" + name + "'");
    t.add(name, parse_class(g, field(s, "class")));
  }
  return t;
}

SH1Expr parse_expr(const json& obj) {
  if (!obj.is_object()) throw SchemaError("expression must be an object {symbol: coefficient}");
  SH1Expr e;
  for (const auto& [name, c] : obj.items()) e.add(name, parse_integer(c));
  return e;
}

std::vector<AreaRelation> parse_relations(const json& arr) {
  if (!arr.is_array()) throw SchemaError("'relations' must be an array");
  std::vector<AreaRelation> out;
  for (const auto& r : arr) out.push_back({parse_expr(field(r, "terms")), parse_rational(field(r, "area"))});
  return out;
}

std::vector<SymmetricTwist> parse_sh1_word(const json& arr) {
  if (!arr.is_array()) throw SchemaError("'word' must be an array");
  std::vector<SymmetricTwist> out;
  for (const auto& l : arr) out.push_back({get_string(l, "twist"), parse_exponent(l, "exp")});
  return out;
}

TransverseArc parse_arc(const json& j) {
  auto num = [&](const char* key, double dflt) { return j.contains(key) ? get_double(j, key) : dflt; };
  const int sign = j.contains("sign") ? get_int(j, "sign") : 1;
  if (sign != 1 && sign != -1) throw SchemaError("arc sign must be 1 or -1");
  const double dx = num("dx", 1.0);
  if (dx == 0.0) throw SchemaError("arc direction dx must be nonzero (transverse to the core)");
  return TransverseArc::straight_segment(num("x0", 0.0), num("y0", 0.0), dx, num("dy", 0.0), sign);
}

Geodesic parse_geodesic(const json& j) {
  if (j.contains("vertical")) return Geodesic::vertical(get_double(j, "vertical"));
  const double radius = get_double(j, "radius");
  if (!(radius > 0)) throw SchemaError("geodesic radius must be positive");
  return Geodesic::semicircle(get_double(j, "center"), radius);
}

HTriangle parse_triangle(const json& j) {
  if (j.contains("geodesics")) {
    const json& gs = j.at("geodesics");
    if (!gs.is_array() || gs.size() != 3) throw SchemaError("'geodesics' needs exactly three entries");
    return HTriangle::from_geodesics(parse_geodesic(gs[0]), parse_geodesic(gs[1]), parse_geodesic(gs[2]));
  }
  const json& vs = field(j, "vertices");
  if (!vs.is_array() || vs.size() != 3) throw SchemaError("'vertices' needs exactly three points");
  std::vector<HPoint> pts;
  for (const auto& v : vs) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw SchemaError("vertex must be [x, y]");
    }
    if (!(v[1].get<double>() > 0)) throw SchemaError("vertex must lie in the upper half-plane");
    pts.push_back({v[0].get<double>(), v[1].get<double>()});
  }
  return HTriangle::from_vertices(pts[0], pts[1], pts[2]);
}

// --- output -----------------------------------------------------------------

std::string basis_name(Genus g, std::size_t index) {
  const auto h = static_cast<std::size_t>(g.value());
  return (index < h ? "x" : "y") + std::to_string(index < h ? index + 1 : index - h + 1);
}

json to_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
    return json(v.convert_to<long long>());
  }
  return json(v.str());
}

json to_json(const Rational& v) { return json(to_string(v)); }

json to_json(const HomologyClass& c) {
  json arr = json::array();
  for (const auto& x : c.coeffs()) arr.push_back(to_json(x));
  return arr;
}

json to_json(const CohomologyFunctional& a) {
  json arr = json::array();
  for (const auto& x : a.coeffs()) arr.push_back(to_json(x));
  return arr;
}

json to_json(const ThirdWedge& w) {
  json arr = json::array();
  for (const auto& [k, c] : w.terms()) {
    arr.push_back({{"triple", {basis_name(w.genus(), k[0]), basis_name(w.genus(), k[1]),
                               basis_name(w.genus(), k[2])}},
                   {"coeff", to_json(c)}});
  }
  return arr;
}

json to_json(const SpMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const SH1Expr& e) {
  json obj = json::object();
  for (const auto& [n, c] : e.terms()) obj[n] = to_json(c);
  return obj;
}

}  // namespace fluxkit::cli
