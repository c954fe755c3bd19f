#pragma once

// JSON <-> library value conversions for scenario files and reports.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fluxkit/annulus_flux.hpp"
#include "fluxkit/homology.hpp"
#include "fluxkit/hyperbolic.hpp"
#include "fluxkit/johnson.hpp"
#include "fluxkit/mapping_class.hpp"
#include "fluxkit/sh1.hpp"

namespace fluxkit::cli {

using json = nlohmann::json;

inline constexpr int kScenarioVersion = 1;

/// Malformed or schema-violating scenario (exit code 2).
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using CurveTable = std::map<std::string, CurveClass>;

const json& field(const json& j, const std::string& key);
int get_int(const json& j, const std::string& key);
double get_double(const json& j, const std::string& key);
std::string get_string(const json& j, const std::string& key);

Integer parse_integer(const json& j);
/// Integer, or a string "p" or "p/q".
Rational parse_rational(const json& j);

Genus parse_genus(const json& scenario);
HomologyClass parse_class(Genus g, const json& j);
CurveTable parse_curves(Genus g, const json& arr);
TwistWord parse_word(const CurveTable& curves, const json& arr);
TorelliWord parse_torelli_word(const CurveTable& curves, const json& arr);
SymbolTable parse_symbols(Genus g, const json& arr);
SH1Expr parse_expr(const json& obj);
std::vector<AreaRelation> parse_relations(const json& arr);
std::vector<SymmetricTwist> parse_sh1_word(const json& arr);
TransverseArc parse_arc(const json& j);
Geodesic parse_geodesic(const json& j);
HTriangle parse_triangle(const json& j);

json to_json(const Integer& v);
json to_json(const Rational& v);
json to_json(const HomologyClass& c);
json to_json(const CohomologyFunctional& a);
json to_json(const ThirdWedge& w);
json to_json(const SpMatrix& m);
json to_json(const SH1Expr& e);

/// "x1", "y2", ... by storage index.
std::string basis_name(Genus g, std::size_t index);

}  // namespace fluxkit::cli
