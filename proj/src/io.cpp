#include "pfrac/io.hpp"

#include <algorithm>
#include <sstream>

#include "pfrac/error.hpp"

namespace pfrac::io {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorCode::Parse, msg); }

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string(what) + " is not valid JSON: " + e.what());
  }
}

Rational rational_at(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where + ": expected a rational string such as \"-3/4\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    fail(where + ": " + e.what());
  }
}

std::size_t index_at(const json& j, const std::string& where) {
  if (!j.is_number_unsigned()) fail(where + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where + ": expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(where + ": missing \"" + key + "\"");
  return *it;
}

IndexSet index_set_at(const json& j, std::size_t bound, const std::string& where) {
  if (!j.is_array()) fail(where + ": expected an array of indices");
  IndexSet s;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto i = index_at(j[k], where + "[" + std::to_string(k) + "]");
    if (i >= bound) fail(where + ": index " + std::to_string(i) + " out of range");
    if (!s.empty() && i <= s.back()) fail(where + ": indices must be strictly increasing");
    s.push_back(i);
  }
  return s;
}

RatVector vector_at(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array()) fail(where + ": expected an array");
  if (j.size() != n) {
    fail(where + ": has " + std::to_string(j.size()) + " entries, expected " + std::to_string(n));
  }
  RatVector v;
  for (std::size_t k = 0; k < n; ++k) {
    v.push_back(rational_at(j[k], where + "[" + std::to_string(k) + "]"));
  }
  return v;
}

std::string term_text(const Decomposition& d, const Term& t) {
  std::string den;
  if (t.ell.size() == 1) {
    den = "(" + format_form(d.input.form(t.ell[0])) + ")";
  } else {
    den = "(";
    for (std::size_t k = 0; k < t.ell.size(); ++k) {
      if (k) den += "*";
      den += "(" + format_form(d.input.form(t.ell[k])) + ")";
    }
    den += ")";
  }
  const Rational mag = t.coeff.abs();
  std::string num = mag.to_string();
  if (mag.denominator() != "1") num = "(" + num + ")";
  return num + "/" + den;
}

}  // namespace

ArrangementInput parse_input(std::string_view text) {
  const json doc = parse_json(text, "input");
  const json& dim = field(doc, "dimension", "input");
  if (!dim.is_number_integer()) fail("input: \"dimension\" must be an integer");
  if (dim.get<std::int64_t>() < 1) {
    throw Error(ErrorCode::BadDimension, "dimension must be at least 1");
  }
  const auto n = dim.get<std::size_t>();
  const json& forms = field(doc, "forms", "input");
  if (!forms.is_array()) fail("input: \"forms\" must be an array");
  std::vector<AffineForm> parsed;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const std::string where = "form " + std::to_string(i);
    const json& f = forms[i];
    parsed.push_back({vector_at(field(f, "vector", where), n, where + " vector"),
                      rational_at(field(f, "mu", where), where + " mu")});
  }
  return ArrangementInput::validate(ArrangementInput(n, std::move(parsed)));
}

json input_to_json(const ArrangementInput& input) {
  json forms = json::array();
  for (const auto& f : input.forms()) {
    forms.push_back({{"vector", rational_list(f.a)}, {"mu", f.mu.to_string()}});
  }
  return {{"dimension", input.dimension()}, {"forms", forms}};
}

json rational_list(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

json point_to_json(const ArrangementPoint& p) {
  return {{"coords", rational_list(p.coords)}, {"xp", p.xp}};
}

json points_to_json(const std::vector<ArrangementPoint>& points) {
  json arr = json::array();
  for (const auto& p : points) arr.push_back(point_to_json(p));
  return {{"points", arr}};
}

json poly_to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{"exponents", e}, {"coefficient", c.to_string()}});
  }
  return {{"n_vars", p.n_vars()}, {"terms", terms}, {"text", p.to_string()}};
}

MultiPoly poly_from_json(const json& j, std::size_t n_vars) {
  const json& terms = field(j, "terms", "polynomial");
  if (!terms.is_array()) fail("polynomial: \"terms\" must be an array");
  std::vector<std::pair<Exponent, Rational>> out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string where = "polynomial term " + std::to_string(k);
    const json& e = field(terms[k], "exponents", where);
    if (!e.is_array() || e.size() != n_vars) fail(where + ": exponent vector has wrong length");
    Exponent exp;
    for (const auto& x : e) {
      if (!x.is_number_unsigned()) fail(where + ": exponents must be non-negative integers");
      exp.push_back(x.get<std::uint32_t>());
    }
    out.emplace_back(std::move(exp), rational_at(field(terms[k], "coefficient", where), where));
  }
  return MultiPoly::from_terms(n_vars, out);
}

json genericity_to_json(const GenericityReport& r) {
  json out = {{"generic", r.generic}};
  if (r.witness == GenericityReport::Witness::OversizedXp) {
    out["witness"] = {{"kind", "oversized_xp"}, {"point", point_to_json(*r.point)}};
  } else if (r.witness == GenericityReport::Witness::SharedPoint) {
    out["witness"] = {{"kind", "shared_point"},
                      {"point", point_to_json(*r.point)},
                      {"bases", json::array({*r.basis_a, *r.basis_b})}};
  }
  return out;
}

json decomposition_to_json(const Decomposition& d, const std::vector<PointPolynomial>& cps) {
  json points = json::array();
  for (const auto& p : d.points) points.push_back(point_to_json(p));
  json terms = json::array();
  for (const auto& t : d.terms) {
    terms.push_back({{"point", t.point_index}, {"ell", t.ell}, {"coeff", t.coeff.to_string()}});
  }
  json polys = json::array();
  for (const auto& cp : cps) polys.push_back({{"point", cp.point_index}, {"cp", poly_to_json(cp.cp)}});
  return {{"points", points},
          {"terms", terms},
          {"strategy", std::string(strategy_name(d.strategy))},
          {"point_polynomials", polys}};
}

json report_to_json(const VerificationReport& r) {
  json out = {{"identity", r.identity.passed},
              {"residues", r.residues.passed},
              {"point_form", r.point_form},
              {"spot_check", {{"trials", r.spot.trials}, {"failures", r.spot.failures}}}};
  if (!r.identity.passed) out["identity_residual"] = r.identity.residual.to_string();
  if (!r.residues.passed) out["offending_points"] = r.residues.offending_points;
  return out;
}

LoadedDecomposition parse_decomposition(std::string_view text, const ArrangementInput& input) {
  const json doc = parse_json(text, "decomposition");
  const std::size_t n = input.dimension();
  const std::size_t m = input.size();

  LoadedDecomposition out{Decomposition{input, {}, {}, PivotStrategy::LastRemovable, {}}, {}};
  auto& d = out.decomposition;
  const json& strategy = field(doc, "strategy", "decomposition");
  if (!strategy.is_string()) fail("decomposition: \"strategy\" must be a string");
  try {
    d.strategy = parse_strategy(strategy.get<std::string>());
  } catch (const Error& e) {
    fail(std::string("decomposition: ") + e.what());
  }

  const json& points = field(doc, "points", "decomposition");
  if (!points.is_array()) fail("decomposition: \"points\" must be an array");
  for (std::size_t k = 0; k < points.size(); ++k) {
    const std::string where = "point " + std::to_string(k);
    d.points.push_back({vector_at(field(points[k], "coords", where), n, where + " coords"),
                        index_set_at(field(points[k], "xp", where), m, where + " xp")});
  }

  const json& terms = field(doc, "terms", "decomposition");
  if (!terms.is_array()) fail("decomposition: \"terms\" must be an array");
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string where = "term " + std::to_string(k);
    const auto point = index_at(field(terms[k], "point", where), where + " point");
    if (point >= d.points.size()) fail(where + ": point index out of range");
    d.terms.push_back({point, index_set_at(field(terms[k], "ell", where), m, where + " ell"),
                       rational_at(field(terms[k], "coeff", where), where + " coeff")});
  }

  if (const auto it = doc.find("point_polynomials"); it != doc.end()) {
    if (!it->is_array()) fail("decomposition: \"point_polynomials\" must be an array");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string where = "point polynomial " + std::to_string(k);
      const auto point = index_at(field((*it)[k], "point", where), where + " point");
      if (point >= d.points.size()) fail(where + ": point index out of range");
      out.point_polynomials.push_back({point, poly_from_json(field((*it)[k], "cp", where), n)});
    }
  }
  return out;
}

std::string format_form(const AffineForm& f) { return poly_from_form(f).to_string(); }

std::string format_coords(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

std::string format_index_set(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::string format_sum(const Decomposition& d) {
  std::string out;
  for (const auto& t : d.terms) {
    const bool negative = t.coeff.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += term_text(d, t);
  }
  return out.empty() ? "0" : out;
}

std::string points_text(const ArrangementInput& input, const std::vector<ArrangementPoint>& points,
                        std::size_t max_xp) {
  std::ostringstream os;
  os << points.size() << (points.size() == 1 ? " point" : " points") << " in dimension "
     << input.dimension() << " (" << input.size() << " forms)\n";
  for (std::size_t k = 0; k < points.size(); ++k) {
    const auto& p = points[k];
    os << "  p" << k << " = " << format_coords(p.coords) << "  X_p = " << format_index_set(p.xp)
       << "  |L(X_p)| = " << spanning_subsets(input, p, max_xp).size() << "\n";
  }
  return os.str();
}

std::string genericity_text(const ArrangementInput& input, const GenericityReport& r) {
  std::ostringstream os;
  os << "generic=" << (r.generic ? "true" : "false") << "\n";
  if (r.witness == GenericityReport::Witness::OversizedXp) {
    os << "witness: point " << format_coords(r.point->coords) << " has X_p = "
       << format_index_set(r.point->xp) << " with |X_p| = " << r.point->xp.size() << " > "
       << input.dimension() << "\n";
  } else if (r.witness == GenericityReport::Witness::SharedPoint) {
    os << "witness: bases " << format_index_set(*r.basis_a) << " and "
       << format_index_set(*r.basis_b) << " share point " << format_coords(r.point->coords)
       << "\n";
  }
  return os.str();
}

std::string decomposition_text(const Decomposition& d, const std::vector<PointPolynomial>& cps,
                               std::size_t max_xp) {
  std::ostringstream os;
  os << "strategy: " << strategy_name(d.strategy) << "\n";
  os << "points:\n";
  for (std::size_t k = 0; k < d.points.size(); ++k) {
    const auto used = std::count_if(d.terms.begin(), d.terms.end(),
                                    [&](const Term& t) { return t.point_index == k; });
    os << "  p" << k << " = " << format_coords(d.points[k].coords)
       << "  X_p = " << format_index_set(d.points[k].xp) << "  terms " << used << " of |L(X_p)| = ";
    if (d.points[k].xp.size() <= max_xp) {
      os << spanning_subsets(d.input, d.points[k], max_xp).size();
    } else {
      os << "?";
    }
    os << "\n";
  }
  os << "terms:\n";
  for (const auto& t : d.terms) {
    os << "  p" << t.point_index << "  ell = " << format_index_set(t.ell) << "  c = " << t.coeff
       << "\n";
  }
  os << "point polynomials:\n";
  for (const auto& cp : cps) os << "  C_p" << cp.point_index << " = " << cp.cp.to_string() << "\n";
  os << "sum:\n  " << format_sum(d) << "\n";
  return os.str();
}

std::string report_text(const VerificationReport& r) {
  auto mark = [](bool ok) { return ok ? "pass" : "FAIL"; };
  std::ostringstream os;
  os << "verification:\n";
  os << "  identity: " << mark(r.identity.passed);
  if (!r.identity.passed) os << " (residual " << r.identity.residual.to_string() << ")";
  os << "\n  residues: " << mark(r.residues.passed);
  if (!r.residues.passed) {
    os << " (points";
    for (auto k : r.residues.offending_points) os << " p" << k;
    os << ")";
  }
  os << "\n  point_form: " << mark(r.point_form) << "\n";
  os << "  spot_check: " << mark(r.spot.passed) << " (" << r.spot.trials << " trials, "
     << r.spot.failures << " failures)\n";
  return os.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace pfrac::io
