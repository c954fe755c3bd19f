#include "commands.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace fluxkit::cli {
namespace {

Rational inv_gm1(Genus g) { return Rational(1, g.value() - 1); }

// Sum of e * psi_* c over the letters.
HomologyClass pushed_class_sum(const TorelliWord& w, Genus g) {
  HomologyClass total(g);
  for (const auto& l : w.letters()) {
    HomologyClass c = word_matrix(l.conjugator, g).apply(l.curve.cls());
    if (l.exponent < 0) total -= c;
    else total += c;
  }
  return total;
}

HomologyClass random_primitive(Genus g, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  for (;;) {
    std::vector<Integer> v(g.rank());
    for (auto& x : v) x = d(rng);
    HomologyClass c(g, std::move(v));
    if (c.is_primitive()) return c;
  }
}

std::vector<TorelliWord> random_push_words(Genus g, int count, int length, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> sign(0, 1), conj_len(0, 2);
  std::vector<TorelliWord> out;
  int label = 0;
  for (int i = 0; i < count; ++i) {
    TorelliWord w;
    for (int k = 0; k < length; ++k) {
      TwistWord psi;
      for (int m = conj_len(rng); m > 0; --m) {
        psi.push(CurveClass("t" + std::to_string(label++), random_primitive(g, rng)), sign(rng) ? 1 : -1);
      }
      w.push(psi, CurveClass("p" + std::to_string(label++), random_primitive(g, rng)), sign(rng) ? 1 : -1);
    }
    out.push_back(std::move(w));
  }
  return out;
}

// Explicit word and/or seeded random words from the scenario.
std::vector<TorelliWord> scenario_words(const json& s, Genus g, const Options& opt, json& results) {
  std::vector<TorelliWord> words;
  if (s.contains("torelli_word")) {
    const CurveTable curves = parse_curves(g, field(s, "curves"));
    words.push_back(parse_torelli_word(curves, s.at("torelli_word")));
  }
  if (s.contains("random_words")) {
    const json& r = s.at("random_words");
    const int count = get_int(r, "count");
    const int length = r.contains("length") ? get_int(r, "length") : 2;
    if (count < 0 || length < 0) throw SchemaError("random word count and length must be non-negative");
    unsigned long long seed = s.contains("seed") ? static_cast<unsigned long long>(get_int(s, "seed")) : 0ULL;
    if (opt.seed) seed = *opt.seed;
    results["seed"] = seed;
    auto rnd = random_push_words(g, count, length, seed);
    words.insert(words.end(), rnd.begin(), rnd.end());
  }
  if (words.empty()) throw SchemaError("need 'torelli_word' or 'random_words'");
  return words;
}

double tolerance_for(const json& s, const Options& opt, double dflt) {
  if (opt.tolerance) return *opt.tolerance;
  if (s.contains("tolerance")) return get_double(s, "tolerance");
  return dflt;
}

}  // namespace

void Checker::check(const std::string& name, bool ok, const std::string& detail) {
  checks_.push_back({{"name", name}, {"pass", ok}});
  if (!ok && !first_failure_) first_failure_ = detail.empty() ? name : name + ": " + detail;
}

// --- mapping classes --------------------------------------------------------

void cmd_twist_matrix(const json& s, const Options&, Checker& ck, json& results) {
  const Genus g = parse_genus(s);
  const CurveTable curves = parse_curves(g, field(s, "curves"));
  const TwistWord w = parse_word(curves, field(s, "word"));
  const SpMatrix m = word_matrix(w, g);
  results["word"] = w.to_string();
  results["matrix"] = to_json(m);
  results["symplectic"] = is_symplectic(m);
  results["torelli"] = m.is_identity();
  ck.check("word matrix is symplectic", is_symplectic(m));
  if (s.contains("expect_torelli")) {
    const bool want = field(s, "expect_torelli").get<bool>();
    ck.check("torelli verdict", m.is_identity() == want, "expected " + std::string(want ? "true" : "false"));
  }
  if (s.contains("expect_matrix")) {
    ck.check("matrix matches expectation", to_json(m) == s.at("expect_matrix"));
  }
}

void cmd_check_relations(const json& s, const Options&, Checker& ck, json& results) {
  const Genus g = parse_genus(s);
  const CurveTable curves = parse_curves(g, field(s, "curves"));
  const json& rels = field(s, "relations");
  if (!rels.is_array()) throw SchemaError("'relations' must be an array");
  auto get = [&](const std::string& n) -> const CurveClass& {
    auto it = curves.find(n);
    if (it == curves.end()) throw SchemaError("unknown curve '" + n + "'");
    return it->second;
  };
  results["relations"] = json::array();
  for (std::size_t i = 0; i < rels.size(); ++i) {
    const json& r = rels[i];
    const std::string type = get_string(r, "type");
    std::vector<std::string> names;
    const json& cs = field(r, "curves");
    if (!cs.is_array()) throw SchemaError("relation 'curves' must be an array");
    for (const auto& c : cs) {
      if (!c.is_string()) throw SchemaError("relation curve names must be strings");
      names.push_back(c.get<std::string>());
    }
    const std::size_t want = type == "braid" || type == "commuting" ? 2
                             : type == "star"                       ? 7
                             : type == "chain"                      ? 5
                                                                    : 0;
    if (want == 0) throw SchemaError("unknown relation type '" + type + "'");
    if (names.size() != want) {
      throw SchemaError(type + " relation needs " + std::to_string(want) + " curves");
    }
    std::vector<CurveClass> c;
    for (const auto& n : names) c.push_back(get(n));

    const std::string label = "relation " + std::to_string(i) + " (" + type + ")";
    const std::string expect_error = r.contains("expect_error") ? get_string(r, "expect_error") : "";
    json entry = {{"type", type}, {"curves", names}};
    std::string error;
    bool holds = false;
    try {
      if (type == "braid") holds = check_braid(c[0], c[1]);
      else if (type == "commuting") holds = check_commuting(c[0], c[1]);
      else if (type == "star") holds = check_star(c[0], c[1], c[2], c[3], c[4], c[5], c[6]);
      else holds = check_chain(c[0], c[1], c[2], c[3], c[4]);
    } catch (const PreconditionError& e) {
      error = "precondition";
      entry["message"] = e.what();
    } catch (const ConfigurationError& e) {
      error = "configuration";
      entry["message"] = e.what();
    }
    if (error.empty()) {
      entry["holds"] = holds;
      if (expect_error.empty()) ck.check(label, holds, "matrix identity fails");
      else ck.check(label, false, "expected " + expect_error + " error");
    } else {
      entry["error"] = error;
      if (expect_error.empty()) ck.check(label, false, error + " error: " + entry["message"].get<std::string>());
      else ck.check(label, error == expect_error, "expected " + expect_error + " error, got " + error);
    }
    results["relations"].push_back(std::move(entry));
  }
}

// --- Johnson / flux ---------------------------------------------------------

void cmd_johnson(const json& s, const Options&, Checker& ck, json& results) {
  const Genus g = parse_genus(s);
  const CurveTable curves = parse_curves(g, field(s, "curves"));
  const TorelliWord w = parse_torelli_word(curves, field(s, "torelli_word"));
  const ThirdWedge tau = johnson(w, g);
  const ThirdWedge closed = push_johnson(pushed_class_sum(w, g));
  results["word"] = w.to_string();
  results["johnson"] = to_json(tau);
  ck.check("word is Torelli", word_matrix(w.to_twist_word(), g).is_identity());
  ck.check("diagonal action agrees with omega ^ psi(c)", tau == closed);
  if (s.contains("expect_johnson")) {
    ck.check("johnson value matches expectation", to_json(tau) == s.at("expect_johnson"),
             "got " + to_json(tau).dump());
  }
}

void cmd_contract(const json& s, const Options&, Checker& ck, json& results) {
  const Genus g = parse_genus(s);
  const CurveTable curves = parse_curves(g, field(s, "curves"));
  const TorelliWord w = parse_torelli_word(curves, field(s, "torelli_word"));
  const HomologyClass phi = contracted_johnson(w, g);
  results["word"] = w.to_string();
  results["contracted_johnson"] = to_json(phi);
  results["contracted_johnson_str"] = phi.to_string();
  const HomologyClass expected = Integer(g.value() - 1) * pushed_class_sum(w, g);
  ck.check("Phi(tau(w)) = (g-1) sum psi(c)", phi == expected, "got " + phi.to_string());
  if (s.contains("expect_class")) {
    ck.check("contraction matches expectation", phi == parse_class(g, s.at("expect_class")),
             "got " + phi.to_string());
  }
}

void cmd_theorem_a(const json& s, const Options& opt, Checker& ck, json& results) {
  const Genus g = parse_genus(s);
  const auto words = scenario_words(s, g, opt, results);
  const Rational coeff(g.value(), g.value() - 1);
  results["coefficient"] = to_json(coeff);
  results["words_checked"] = words.size();
  std::size_t passed = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const bool ok = theorem_a_check(words[i], g);
    passed += ok;
    ck.check("word " + std::to_string(i), ok, words[i].to_string());
  }
  results["words_passed"] = passed;
  if (s.contains("torelli_word")) {
    results["flsec"] = to_json(flsec(words[0], g));
    results["rhs"] = to_json(coeff * poincare_dual_inv(contracted_johnson(words[0], g)));
  }
}

void cmd_theorem_b(const json& s, const Options& opt, Checker& ck, json& results) {
  const Genus g = parse_genus(s);
  const auto words = scenario_words(s, g, opt, results);
  const Rational ca(g.value(), g.value() - 1);
  ck.check("g/(g-1) - 1 = 1/(g-1)", ca - 1 == inv_gm1(g));
  results["words_checked"] = words.size();
  for (std::size_t i = 0; i < words.size(); ++i) {
    const CohomologyFunctional dphi = poincare_dual_inv(contracted_johnson(words[i], g));
    const CohomologyFunctional pred = theorem_b_predict_fljac(words[i], g);
    ck.check("word " + std::to_string(i) + " prediction = D^-1 Phi tau / (g-1)", pred == inv_gm1(g) * dphi,
             words[i].to_string());
    ck.check("word " + std::to_string(i) + " Flsec - prediction = D^-1 Phi tau", flsec(words[i], g) - pred == dphi,
             words[i].to_string());
  }
  if (s.contains("torelli_word")) {
    const CohomologyFunctional pred = theorem_b_predict_fljac(words[0], g);
    results["prediction"] = to_json(pred);
    results["prediction_str"] = pred.to_string();
    if (s.contains("expect_prediction")) {
      CohomologyFunctional want(g);
      const json& e = s.at("expect_prediction");
      if (!e.is_array() || e.size() != g.rank()) throw SchemaError("'expect_prediction' needs 2g entries");
      for (std::size_t k = 0; k < g.rank(); ++k) want[k] = parse_rational(e[k]);
      ck.check("prediction matches expectation", pred == want, "got " + pred.to_string());
    }
  }
}

// --- SH1 --------------------------------------------------------------------

void cmd_sh1_verify(const json& s, const Options&, Checker& ck, json& results) {
  const Genus g = parse_genus(s);
  const SymbolTable table = parse_symbols(g, field(s, "symbols"));
  const auto rels = s.contains("relations") ? parse_relations(s.at("relations")) : std::vector<AreaRelation>{};
  const auto word = parse_sh1_word(field(s, "word"));
  for (const auto& t : word)
    if (!table.contains(t.symbol)) throw SchemaError("unknown symbol '" + t.symbol + "' in word");
  for (const auto& r : rels)
    for (const auto& [n, c] : r.lhs.terms())
      if (!table.contains(n)) throw SchemaError("unknown symbol '" + n + "' in relation");
  auto parse_known = [&](const json& j) {
    SH1Expr e = parse_expr(j);
    for (const auto& [n, c] : e.terms())
      if (!table.contains(n)) throw SchemaError("unknown symbol '" + n + "'");
    return e;
  };

  if (s.contains("images")) {
    results["images"] = json::array();
    for (const auto& im : s.at("images")) {
      const SH1Expr e = parse_known(field(im, "expr"));
      const SH1Expr want = parse_known(field(im, "expected"));
      const SH1Expr got = apply_word(table, word, e);
      results["images"].push_back({{"expr", e.to_string()}, {"image", got.to_string()}});
      ck.check("image of " + e.to_string(), got == want, "got " + got.to_string() + ", expected " + want.to_string());
    }
  }

  if (s.contains("targets")) {
    std::vector<SH1Expr> basis;
    for (const auto& t : s.at("targets")) basis.push_back(parse_known(t));
    std::vector<CertificateEntry> cert;
    try {
      cert = ham_certificate(table, word, basis, rels);
    } catch (const PreconditionError& e) {
      ck.check("word acts trivially on the targets' classes", false, e.what());
      return;
    }
    results["targets"] = json::array();
    for (const auto& c : cert) {
      json entry = {{"target", c.target.to_string()},
                    {"difference", c.difference.to_string()},
                    {"residual", c.reduction.residual.to_string()},
                    {"flux", c.flux() ? to_json(*c.flux()) : json(nullptr)}};
      json kernel = json::array();
      for (const auto& a : c.reduction.kernel_areas) kernel.push_back(to_json(a));
      entry["kernel_areas"] = kernel;
      results["targets"].push_back(std::move(entry));
      const std::string name = "flux on " + c.target.to_string();
      if (!c.flux()) ck.check(name, false, "residual " + c.reduction.residual.to_string() + " not in the relation lattice");
      else ck.check(name, *c.flux() == 0, "flux " + to_string(*c.flux()) + " is nonzero");
    }
    results["hamiltonian"] = is_hamiltonian(cert);
  }
  if (!s.contains("images") && !s.contains("targets")) throw SchemaError("need 'targets' or 'images'");
}

// --- annulus ----------------------------------------------------------------

void cmd_flux_annulus(const json& s, const Options& opt, Checker& ck, json& results) {
  const std::string mode = get_string(s, "mode");
  const FlatAnnulus ann(get_double(s, "r"), get_double(s, "ell"));
  const TransverseArc arc = s.contains("arc") ? parse_arc(s.at("arc")) : TransverseArc::straight_segment(0, 0, 1, 0);
  results["mode"] = mode;

  auto report = [&](double value, double expected, double tol, bool relative) {
    const double err = std::abs(value - expected);
    const double bound = relative ? tol * std::max(1.0, std::abs(expected)) : tol;
    results["value"] = value;
    results["expected"] = expected;
    results["abs_err"] = err;
    results["tolerance"] = tol;
    ck.check(mode + " value", err <= bound, "abs_err " + std::to_string(err));
  };

  if (mode == "push-flsec") {
    const int g = get_int(s, "genus");
    if (g < 2) throw SchemaError("genus must be at least 2");
    if (!(ann.area() < g)) {
      ck.check("annulus fits in the surface", false, "2 r l must be smaller than g");
      return;
    }
    report(flsec_push_numeric(g, ann, arc), arc.sign * double(g), tolerance_for(s, opt, 1e-8), true);
  } else if (mode == "swept") {
    const std::string kind = s.contains("profile") ? get_string(s, "profile") : "push";
    if (kind != "push" && kind != "twist") throw SchemaError("profile must be 'push' or 'twist'");
    const double t = s.contains("t") ? get_double(s, "t") : 1.0;
    const ShearProfile f = ShearProfile::make(kind == "push" ? ProfileKind::Push : ProfileKind::Twist, ann.r());
    results["profile"] = kind;
    results["t"] = t;
    const double expected = kind == "push" ? 0.0 : arc.sign * ann.ell() * t * ann.r();
    report(swept_flux(ann, f, arc, t), expected, tolerance_for(s, opt, 1e-9), false);
  } else if (mode == "twist-triangles") {
    const bool asymmetric = s.contains("asymmetric") && field(s, "asymmetric").get<bool>();
    const double r = ann.r();
    const ShearProfile f = asymmetric
        ? ShearProfile::custom(ProfileKind::Twist, r, [r](double x) {
            const double v = smooth_step((x + r) / (2 * r));
            return v * v;
          }, {0.0})
        : ShearProfile::make(ProfileKind::Twist, r);
    const TriangleAreas a = twist_triangle_areas(ann, f, arc);
    const double diff = std::abs(a.a1 - a.a2);
    const double tol = tolerance_for(s, opt, asymmetric ? 1e-4 : 1e-9);
    results["a1"] = a.a1;
    results["a2"] = a.a2;
    results["abs_diff"] = diff;
    results["tolerance"] = tol;
    results["asymmetric"] = asymmetric;
    if (asymmetric) ck.check("asymmetric profile separates the areas", diff > tol, "|A1-A2| = " + std::to_string(diff));
    else ck.check("triangle areas agree", diff <= tol, "|A1-A2| = " + std::to_string(diff));
  } else {
    throw SchemaError("unknown flux-annulus mode '" + mode + "'");
  }
}

// --- hyperbolic -------------------------------------------------------------

void cmd_hyp_area(const json& s, const Options& opt, Checker& ck, json& results) {
  const std::string mode = get_string(s, "mode");
  const double tol = tolerance_for(s, opt, 1e-9);
  results["mode"] = mode;
  if (mode == "triangle") {
    const HTriangle t = parse_triangle(field(s, "triangle"));
    const TriangleArea a = triangle_area(t, tol);
    results["angles"] = a.angles;
    results["area"] = a.area;
    results["degenerate"] = a.degenerate;
    const bool want_degenerate = s.contains("expect_degenerate") && field(s, "expect_degenerate").get<bool>();
    ck.check("degeneracy verdict", a.degenerate == want_degenerate,
             want_degenerate ? "expected a degenerate configuration" : "triangle is degenerate");
    if (!a.degenerate) {
      const double deficit = std::numbers::pi - (a.angles[0] + a.angles[1] + a.angles[2]);
      ck.check("area is the angle deficit", std::abs(a.area - deficit) <= 1e-10);
      ck.check("angle sum below pi", a.angles[0] + a.angles[1] + a.angles[2] < std::numbers::pi);
    }
    if (s.contains("expected_area")) {
      const double want = get_double(s, "expected_area");
      ck.check("area matches expectation", std::abs(a.area - want) <= tol, "area " + std::to_string(a.area));
    }
  } else if (mode == "subsurface") {
    const int genus = get_int(s, "surface_genus");
    const int boundary = get_int(s, "boundary");
    results["surface_genus"] = genus;
    results["boundary"] = boundary;
    if (2 - 2 * genus - boundary >= 0 || genus < 0 || boundary < 0) {
      ck.check("surface is hyperbolic", false, "Euler characteristic must be negative");
      return;
    }
    const double area = subsurface_area(genus, boundary);
    results["area"] = area;
    results["area_over_pi"] = area / std::numbers::pi;
    if (s.contains("expected_area_over_pi")) {
      const double want = get_double(s, "expected_area_over_pi") * std::numbers::pi;
      ck.check("area matches expectation", std::abs(area - want) <= tol, "area " + std::to_string(area));
    }
  } else if (mode == "opposite") {
    const json& ts = field(s, "triangles");
    if (!ts.is_array() || ts.size() != 2) throw SchemaError("'triangles' needs exactly two entries");
    const HTriangle t1 = parse_triangle(ts[0]), t2 = parse_triangle(ts[1]);
    results["area1"] = triangle_area(t1, tol).area;
    results["area2"] = triangle_area(t2, tol).area;
    try {
      ck.check("equal areas", opposite_angle_area_check(t1, t2, tol));
    } catch (const PreconditionError& e) {
      ck.check("angle multisets agree", false, e.what());
    }
  } else {
    throw SchemaError("unknown hyp-area mode '" + mode + "'");
  }
}

}  // namespace fluxkit::cli
