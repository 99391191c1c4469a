#include "qsphere/serialize.hpp"

#include <cmath>

#include "json.hpp"
#include "qsphere/poly_text.hpp"

namespace qsphere {
namespace {

using nlohmann::json;

double round12(double v) {
  const double r = std::round(v * 1e12) / 1e12;
  return r == 0.0 ? 0.0 : r;
}

json complex_json(const Complex& z) { return json::array({round12(z.real()), round12(z.imag())}); }

json poly_json(const MultiPoly& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) {
    json exps = json::array();
    for (int v = 0; v < f.arity(); ++v) exps.push_back(e[v]);
    terms.push_back({{"exp", exps}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  return {{"arity", f.arity()}, {"terms", terms}};
}

MultiPoly poly_from(const json& j) {
  try {
    const int arity = j.at("arity").get<int>();
    if (arity < 2 || arity > kMaxArity) throw ParseError("arity must be 2, 3 or 4");
    MultiPoly f(arity);
    for (const auto& t : j.at("terms")) {
      const auto& exps = t.at("exp");
      if (static_cast<int>(exps.size()) != arity) throw ParseError("exponent tuple length differs from arity");
      Exponents e{};
      for (int v = 0; v < arity; ++v) {
        const int value = exps[static_cast<std::size_t>(v)].get<int>();
        if (value < 0 || value > 0xffff) throw ParseError("exponent out of range");
        e[v] = static_cast<std::uint16_t>(value);
      }
      const Integer num(t.at("num").get<std::string>(), 10);
      const Integer den(t.at("den").get<std::string>(), 10);
      if (den == 0) throw ParseError("zero denominator");
      Rational c(num, den);
      c.canonicalize();
      f.add_term(e, c);
    }
    return f;
  } catch (const json::exception& ex) {
    throw ParseError(std::string("polynomial JSON: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    if (dynamic_cast<const ParseError*>(&ex)) throw;
    throw ParseError(std::string("polynomial JSON: ") + ex.what());
  }
}

json point_json(const ProjectivePoint& p) {
  json out = json::array();
  for (const auto& c : p) out.push_back(c.get_str());
  return out;
}

std::string dump(const json& j, int indent) { return j.dump(indent); }

}  // namespace

std::string poly_to_json(const MultiPoly& f, int indent) { return dump(poly_json(f), indent); }

MultiPoly poly_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw ParseError(std::string("invalid JSON: ") + ex.what());
  }
  return poly_from(j);
}

std::string surface_to_json(const Surface& s, int indent) {
  json j;
  j["n"] = s.order;
  j["q"] = s.claimed_q ? json(*s.claimed_q) : json(nullptr);
  j["provenance"] = to_string(s.provenance);
  j["p"] = s.p ? json(s.p->get_str()) : json(nullptr);
  j["polynomial"] = poly_json(s.F);
  return dump(j, indent);
}

Surface surface_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw ParseError(std::string("invalid JSON: ") + ex.what());
  }
  if (!j.is_object() || !j.contains("polynomial")) throw ParseError("surface JSON needs a 'polynomial' member");
  Surface s = make_surface(poly_from(j.at("polynomial")));
  try {
    if (j.contains("n") && j["n"].get<int>() != s.order) {
      throw ParseError("'n' does not match the polynomial degree");
    }
    if (j.contains("q") && !j["q"].is_null()) s.claimed_q = j["q"].get<int>();
    if (j.contains("provenance")) s.provenance = parse_provenance(j["provenance"].get<std::string>());
    if (j.contains("p") && !j["p"].is_null()) s.p = parse_rational(j["p"].get<std::string>());
  } catch (const json::exception& ex) {
    throw ParseError(std::string("surface JSON: ") + ex.what());
  }
  if (s.provenance == Provenance::TwoPoint && !s.p) throw ParseError("two-point surface without 'p'");
  return s;
}

std::string to_json(const MultiplicityReport& report, int indent) {
  const json j{{"point", point_json(report.point)},
               {"multiplicity", report.multiplicity},
               {"tangent_cone", to_string(report.tangent_cone.poly())},
               {"tangent_cone_poly", poly_json(report.tangent_cone.poly())}};
  return dump(j, indent);
}

std::string to_json(const LineIntersection& report, int indent) {
  json coeffs = json::array();
  for (const auto& c : report.poly.coeffs()) coeffs.push_back(c.get_str());
  json roots = json::array();
  for (const auto& r : report.roots) roots.push_back({{"t", complex_json(r.value)}, {"multiplicity", r.multiplicity}});
  const json j{{"coefficients", coeffs},
               {"line_on_surface", report.line_on_surface},
               {"zero_multiplicity", report.zero_multiplicity},
               {"roots", roots}};
  return dump(j, indent);
}

std::string to_json(const LineFan& fan, int indent) {
  json dirs = json::array();
  for (std::size_t i = 0; i < fan.directions.size(); ++i) {
    json d = json::array();
    for (const auto& c : fan.directions[i]) d.push_back(complex_json(c));
    dirs.push_back({{"direction", d}, {"multiplicity", fan.multiplicities[i]}});
  }
  const json j{{"count", fan.count},
               {"conjugate_paired", fan.conjugate_paired},
               {"max_residual", fan.max_residual},
               {"directions", dirs}};
  return dump(j, indent);
}

std::string to_json(const CircleSection& section, int indent) {
  json circles = json::array();
  for (const auto& c : section.circles) {
    circles.push_back({{"rho_t", complex_json(c.rho_t)},
                       {"center", {complex_json(c.rho_center), round12(c.z_center)}},
                       {"radius_sq", complex_json(c.radius_sq)},
                       {"real", c.real}});
  }
  const json j{{"phi", round12(section.phi)},
               {"real_count", section.real_count},
               {"degenerate", section.degenerate},
               {"residual", section.residual},
               {"circles", circles}};
  return dump(j, indent);
}

std::string to_json(const AuditReport& report, int indent) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"point", point_json(e.point)},
                       {"on_surface", e.on_surface},
                       {"multiplicity", e.multiplicity},
                       {"exceeds_bound", e.exceeds_bound},
                       {"splits_isotropic_cone",
                        e.splits_isotropic_cone ? json(*e.splits_isotropic_cone) : json(nullptr)}});
  }
  return dump(json{{"bound", report.bound}, {"consistent", report.consistent}, {"entries", entries}}, indent);
}

std::string to_json(const FactorScan& scan, int indent) {
  json factors = json::array();
  for (const auto& f : scan.linear_factors) factors.push_back(to_string(f));
  const json j{{"linear_factors", factors},
               {"residual", to_string(scan.residual)},
               {"signature", scan.signature},
               {"partial", scan.partial}};
  return dump(j, indent);
}

std::string to_json(const CSOrderReport& r, int indent) {
  const json j{{"m", r.m},
               {"z_axis", r.z_axis},
               {"a_pairs", r.a_pairs},
               {"p1_fold", r.p1_fold},
               {"p2_fold", r.p2_fold},
               {"surface_order", r.surface_order},
               {"absolute_mult", r.absolute_mult},
               {"axis_mult", r.axis_mult},
               {"point_mult", r.point_mult}};
  return dump(j, indent);
}

}  // namespace qsphere
