#include "qsphere_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "common.hpp"
#include "json.hpp"

namespace qsphere::cli {
namespace {

using nlohmann::json;

void add_surface_options(CLI::App* sub, SurfaceArgs& a) {
  sub->add_option("--in", a.in, "Surface JSON file");
  sub->add_option("--family", a.family, "general, one-point, two-point or custom")
      ->check(CLI::IsMember({"general", "one-point", "two-point", "custom"}));
  sub->add_option("-n", a.n, "Order parameter n");
  sub->add_option("-q", a.q, "Absolute conic multiplicity (general family)");
  sub->add_option("-p", a.p, "Distance parameter, rational 'a/b' (two-point family)");
  sub->add_option("--fn", a.fn, "Tangent cone form f_n in x, y, z (one-point family)");
  sub->add_option("--affine", a.affine, "Affine polynomial in x, y, z (custom family)");
  sub->add_option("--g-lead", a.g_lead, "g_{n-2q} (general family, default 1)");
  sub->add_option("--g-middle", a.g_middle, "g_{n-2q+j} for j = 1..q-1 (general family)");
  sub->add_option("--f-tail", a.f_tail, "f_{n-j} for j = q..n (general family)");
}

struct Format {
  std::string value = "text";
  bool json() const { return value == "json"; }
};

void add_format(CLI::App* sub, Format& f) {
  sub->add_option("--format", f.value, "Output format")->check(CLI::IsMember({"text", "json"}));
}

json parse_json(const std::string& text) { return json::parse(text); }

// --- construct -------------------------------------------------------------

struct ConstructCmd {
  SurfaceArgs surface;
  Format format{"json"};
  std::string out;

  int operator()(std::ostream& os) const {
    const Surface s = build_surface(surface);
    if (format.json()) {
      write_text(out, surface_to_json(s) + "\n", os);
    } else {
      std::string text = "n=" + std::to_string(s.order) + "\n";
      if (s.claimed_q) text += "q=" + std::to_string(*s.claimed_q) + "\n";
      text += "provenance=" + to_string(s.provenance) + "\n";
      if (s.p) text += "p=" + to_string(*s.p) + "\n";
      text += "F=" + to_string(s.F) + "\n";
      write_text(out, text, os);
    }
    return kExitOk;
  }
};

// --- verify ----------------------------------------------------------------

struct VerifyCmd {
  SurfaceArgs surface;
  Format format;
  std::vector<std::string> points;

  int operator()(std::ostream& os) const {
    const Surface s = build_surface(surface);
    const int q = absolute_multiplicity(s);
    const bool entire = is_entirely_spherical(s);
    const bool claim_ok = !s.claimed_q || *s.claimed_q == q;

    std::vector<ProjectivePoint> candidates;
    if (s.provenance == Provenance::OnePoint || s.provenance == Provenance::TwoPoint) {
      candidates.push_back(affine_point(0, 0, 0));
    }
    if (s.provenance == Provenance::TwoPoint && s.p) candidates.push_back(affine_point(0, 0, *s.p));
    for (const auto& text : points) {
      const AffinePoint a = parse_affine_point(text);
      candidates.push_back(affine_point(a[0], a[1], a[2]));
    }

    json j{{"n", s.order}, {"q", q}, {"entirely_spherical", entire}};
    j["claimed_q"] = s.claimed_q ? json(*s.claimed_q) : json(nullptr);
    j["claimed_q_confirmed"] = claim_ok;
    std::string text = "n=" + std::to_string(s.order) + "\nq=" + std::to_string(q) + "\n";
    if (s.claimed_q) {
      text += "claimed_q=" + std::to_string(*s.claimed_q) + (claim_ok ? " confirmed" : " MISMATCH") + "\n";
    }
    text += std::string("entirely_spherical=") + (entire ? "true" : "false") + "\n";

    json pts = json::array();
    for (const auto& c : candidates) {
      try {
        const MultiplicityReport r = point_multiplicity(s, c);
        pts.push_back(parse_json(to_json(r)));
        text += "point " + point_text(c) + " multiplicity=" + std::to_string(r.multiplicity) +
                " cone: " + to_string(r.tangent_cone.poly()) + "\n";
      } catch (const PreconditionError& e) {
        if (e.condition() != "P on S") throw;
        pts.push_back({{"point", point_text(c)}, {"on_surface", false}});
        text += "point " + point_text(c) + " not on surface\n";
      }
    }
    j["points"] = pts;

    bool audit_ok = true;
    if (entire && !candidates.empty()) {
      const AuditReport audit = max_multiplicity_audit(s, candidates);
      audit_ok = audit.consistent;
      j["audit"] = parse_json(to_json(audit));
      text += "multiplicity_bound=" + std::to_string(audit.bound) +
              (audit.consistent ? " respected" : " VIOLATED") + "\n";
    }
    os << (format.json() ? j.dump(2) + "\n" : text);
    return claim_ok && audit_ok ? kExitOk : kExitCheckFailed;
  }
};

// --- cone ------------------------------------------------------------------

struct ConeCmd {
  SurfaceArgs surface;
  Format format;
  std::string point;
  bool factors = false;

  int operator()(std::ostream& os) const {
    HomogeneousForm cone;
    int multiplicity = 0;
    if (surface.family == "two-point" && point.empty()) {
      const TwoPointParams params{surface.n, parse_rational(surface.p)};
      cone = tangent_cone_two_point(params);
      multiplicity = cone.degree();
    } else {
      const Surface s = build_surface(surface);
      AffinePoint at{0, 0, 0};
      if (!point.empty()) at = parse_affine_point(point);
      const MultiplicityReport r = point_multiplicity(s, affine_point(at[0], at[1], at[2]));
      cone = r.tangent_cone;
      multiplicity = r.multiplicity;
    }
    const MultiPoly norm = normalized(cone.poly());
    json j{{"multiplicity", multiplicity}, {"cone", to_string(cone.poly())}, {"normalized", to_string(norm)}};
    std::string text = "multiplicity=" + std::to_string(multiplicity) + "\ncone: " + to_string(cone.poly()) +
                       "\nnormalized: " + to_string(norm) + "\n";
    if (factors) {
      const FactorScan scan = tangent_cone_factor_scan(cone);
      j["factor_scan"] = parse_json(to_json(scan));
      text += "linear factors:";
      for (const auto& f : scan.linear_factors) text += " (" + to_string(f) + ")";
      text += "\nresidual: " + to_string(scan.residual) + "\nsignature:";
      for (int d : scan.signature) text += " " + std::to_string(d);
      text += scan.partial ? " (partial)\n" : "\n";
    }
    os << (format.json() ? j.dump(2) + "\n" : text);
    return kExitOk;
  }
};

// --- lines -----------------------------------------------------------------

std::string complex_text(const Complex& z) {
  return fixed12(z.real()) + (z.imag() < 0 ? "-" : "+") + fixed12(std::abs(z.imag())) + "i";
}

struct LinesCmd {
  SurfaceArgs surface;
  Format format;

  int operator()(std::ostream& os) const {
    LineFan fan;
    if (surface.family.empty() && surface.in.empty() && !surface.fn.empty()) {
      fan = isotropic_directions(HomogeneousForm(parse_polynomial(surface.fn, 3)));
    } else {
      fan = lines_through_origin(build_surface(surface));
    }
    if (format.json()) {
      os << to_json(fan, 2) << "\n";
      return kExitOk;
    }
    os << "count=" << fan.count << "\nconjugate_paired=" << (fan.conjugate_paired ? "true" : "false")
       << "\nmax_residual=" << fan.max_residual << "\n";
    for (std::size_t i = 0; i < fan.directions.size(); ++i) {
      const auto& d = fan.directions[i];
      os << "(" << complex_text(d[0]) << ", " << complex_text(d[1]) << ", " << complex_text(d[2])
         << ") multiplicity=" << fan.multiplicities[i] << "\n";
    }
    return kExitOk;
  }
};

// --- section ---------------------------------------------------------------

struct SectionCmd {
  SurfaceArgs surface;
  Format format;
  std::string phi = "0";

  int operator()(std::ostream& os) const {
    const CircleSection sec = axial_section(build_surface(surface), parse_angle(phi));
    if (format.json()) {
      os << to_json(sec, 2) << "\n";
      return kExitOk;
    }
    os << "phi=" << fixed12(sec.phi) << "\nreal_count=" << sec.real_count
       << "\ndegenerate=" << (sec.degenerate ? "true" : "false") << "\nresidual=" << sec.residual << "\n";
    for (const auto& c : sec.circles) {
      os << "rho_t=" << complex_text(c.rho_t) << " center=(" << complex_text(c.rho_center) << ", "
         << fixed12(c.z_center) << ") r2=" << complex_text(c.radius_sq) << (c.real ? " real" : "") << "\n";
    }
    return kExitOk;
  }
};

// --- curve -----------------------------------------------------------------

struct CurveCmd {
  int n = 0;
  std::string fn;
  std::string out;
  double stroke_width = 0.01;
  int samples = 64;
  double max_step = 0.02;
  std::vector<std::string> rays;
  Format format;

  int operator()(std::ostream& os) const {
    const PlaneCurve curve = fn.empty() ? polar_family_curve(n)
                                        : circular_curve(n, HomogeneousForm(parse_polynomial(fn, 2), n));
    std::string svg;
    if (fn.empty()) {
      SvgStyle style;
      style.stroke_width = stroke_width;
      svg = render_svg(polar_sample(n, {samples, max_step}), style);
    } else if (!out.empty()) {
      throw PreconditionError("polar family", "SVG sampling is only available without --fn");
    }
    if (out.empty() && fn.empty() && rays.empty()) {
      os << svg;
      return kExitOk;
    }
    if (!out.empty()) write_text(out, svg, os);

    json j{{"order", curve.order}, {"circularity", curve.circularity},
           {"entirely_circular", curve.entirely_circular()}, {"F", to_string(curve.F)}};
    std::string text = "order=" + std::to_string(curve.order) + "\ncircularity=" +
                       std::to_string(curve.circularity) + "\nentirely_circular=" +
                       (curve.entirely_circular() ? "true" : "false") + "\n";
    json rj = json::array();
    for (const auto& r : rays) {
      const double phi = parse_angle(r);
      const int count = real_ray_intersections(curve, phi);
      rj.push_back({{"phi", phi}, {"real_intersections", count}});
      text += "ray phi=" + fixed12(phi) + " real_intersections=" + std::to_string(count) + "\n";
    }
    j["rays"] = rj;
    os << (format.json() ? j.dump(2) + "\n" : text);
    return kExitOk;
  }
};

// --- mesh ------------------------------------------------------------------

struct MeshCmd {
  SurfaceArgs surface;
  int resolution = 64;
  std::vector<double> bounds;
  std::string out;
  int threads = 0;

  int operator()(std::ostream& os) const {
    const Surface s = build_surface(surface);
    GridSpec grid = suggest_grid(s, resolution);
    if (!bounds.empty()) {
      if (bounds.size() != 6) throw PreconditionError("six bounds", "--bounds takes x0 y0 z0 x1 y1 z1");
      grid.lo = {bounds[0], bounds[1], bounds[2]};
      grid.hi = {bounds[3], bounds[4], bounds[5]};
    }
    const Mesh mesh = polygonize(s, grid, {threads});
    const std::string obj = render_obj(mesh);
    if (out.empty()) {
      os << obj;
      return kExitOk;
    }
    write_text(out, obj, os);
    const auto singular = std::count(mesh.singular.begin(), mesh.singular.end(), std::uint8_t{1});
    os << "vertices=" << mesh.vertices.size() << "\ntriangles=" << mesh.triangles.size()
       << "\nsingular_vertices=" << singular << "\n";
    return kExitOk;
  }
};

}  // namespace

double parse_angle(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (c != ' ' && c != '*') text += c;
  }
  const std::size_t at = text.find("pi");
  if (at == std::string::npos) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      throw ParseError("bad angle '" + raw + "'");
    }
    if (used != text.size() || !std::isfinite(v)) throw ParseError("bad angle '" + raw + "'");
    return v;
  }
  std::string head = text.substr(0, at);
  std::string tail = text.substr(at + 2);
  if (head.empty() || head == "+") head = "1";
  if (head == "-") head = "-1";
  Rational factor = parse_rational(head);
  if (!tail.empty()) {
    if (tail[0] != '/') throw ParseError("bad angle '" + raw + "'");
    const Rational denom = parse_rational(tail.substr(1));
    if (denom == 0) throw ParseError("bad angle '" + raw + "'");
    factor /= denom;
  }
  return factor.get_d() * std::numbers::pi;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction and verification of q-spherical surfaces", "qsphere"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", "qsphere 0.1.0");

  std::function<int(std::ostream&)> action;

  ConstructCmd construct;
  auto* c = app.add_subcommand("construct", "Build a surface and write it as JSON");
  add_surface_options(c, construct.surface);
  add_format(c, construct.format);
  c->add_option("--out,-o", construct.out, "Output file (default stdout)");
  c->callback([&] { action = construct; });

  VerifyCmd verify;
  auto* v = app.add_subcommand("verify", "Absolute conic multiplicity and singular points");
  v->add_option("input", verify.surface.in, "Surface JSON file");
  add_surface_options(v, verify.surface);
  add_format(v, verify.format);
  v->add_option("--point", verify.points, "Extra affine point 'x,y,z' to audit");
  v->callback([&] { action = verify; });

  ConeCmd cone;
  auto* k = app.add_subcommand("cone", "Tangent cone at a point (default the origin)");
  add_surface_options(k, cone.surface);
  add_format(k, cone.format);
  k->add_option("--point", cone.point, "Affine point 'x,y,z'");
  k->add_flag("--factors", cone.factors, "Scan for rational linear factors");
  k->callback([&] { action = cone; });

  LinesCmd lines;
  auto* l = app.add_subcommand("lines", "Lines through the n-fold origin of a one-point surface");
  add_surface_options(l, lines.surface);
  add_format(l, lines.format);
  l->callback([&] { action = lines; });

  SectionCmd section;
  auto* s = app.add_subcommand("section", "Axial plane section of a two-point surface");
  add_surface_options(s, section.surface);
  add_format(s, section.format);
  s->add_option("--phi", section.phi, "Plane angle, e.g. 0.5 or pi/6");
  s->callback([&] { action = section; });

  CurveCmd curve;
  auto* cv = app.add_subcommand("curve", "Entirely circular plane curve; SVG plot and ray counts");
  cv->add_option("-n", curve.n, "Order parameter n")->required();
  cv->add_option("--fn", curve.fn, "Binary form f_n in x, y (default -Im (x + iy)^n)");
  cv->add_option("--out,-o", curve.out, "SVG output file");
  cv->add_option("--stroke-width", curve.stroke_width, "SVG stroke width")->check(CLI::PositiveNumber);
  cv->add_option("--samples", curve.samples, "Samples per petal")->check(CLI::Range(2, 100000));
  cv->add_option("--max-step", curve.max_step, "Largest gap between consecutive points")
      ->check(CLI::PositiveNumber);
  cv->add_option("--ray", curve.rays, "Count real intersections of the line at this angle");
  add_format(cv, curve.format);
  cv->callback([&] { action = curve; });

  MeshCmd mesh;
  auto* m = app.add_subcommand("mesh", "Polygonize a surface into an OBJ mesh");
  add_surface_options(m, mesh.surface);
  m->add_option("--resolution", mesh.resolution, "Cells per axis (8..512)");
  m->add_option("--bounds", mesh.bounds, "x0 y0 z0 x1 y1 z1")->expected(6);
  m->add_option("--out,-o", mesh.out, "OBJ output file (default stdout)");
  m->add_option("--threads", mesh.threads, "Worker threads (0: QSPHERE_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);
  m->callback([&] { action = mesh; });

  int partition_n = 0;
  auto* pt = app.add_subcommand("partition", "Number of partitions p(n) of n");
  pt->add_option("-n", partition_n, "n >= 1")->required();
  pt->callback([&] {
    action = [&partition_n](std::ostream& os) {
      os << partition_count(partition_n).get_str() << "\n";
      return kExitOk;
    };
  });

  std::array<int, 5> cs{};
  Format cs_format;
  auto* co = app.add_subcommand("csorder", "Order and multiplicities of a surface of circles");
  co->add_option("-m", cs[0], "Order of the generating curve")->required();
  co->add_option("--z-axis", cs[1], "Intersections with the axis");
  co->add_option("--a-pairs", cs[2], "Pairs of absolute conic points");
  co->add_option("--p1", cs[3], "Multiplicity at the first fixed point");
  co->add_option("--p2", cs[4], "Multiplicity at the second fixed point");
  add_format(co, cs_format);
  co->callback([&] {
    action = [&](std::ostream& os) {
      const CSOrderReport r = cs_order_report(cs[0], cs[1], cs[2], cs[3], cs[4]);
      if (cs_format.json()) {
        os << to_json(r, 2) << "\n";
      } else {
        os << "order=" << r.surface_order << "\nabsolute_mult=" << r.absolute_mult << "\naxis_mult="
           << r.axis_mult << "\npoint_mult=" << r.point_mult << "\n";
      }
      return kExitOk;
    };
  });

  ReproduceOptions repro;
  auto* rp = app.add_subcommand("reproduce", "Write figure meshes, curve plots and a manifest");
  rp->add_option("--outdir", repro.outdir, "Output directory")->required();
  rp->add_option("--resolution", repro.resolution, "Mesh cells per axis");
  rp->add_option("--threads", repro.threads, "Worker threads")->check(CLI::NonNegativeNumber);
  rp->callback([&] {
    action = [&](std::ostream& os) {
      const std::string manifest = reproduce(repro);
      os << "wrote " << json::parse(manifest).at("artifacts").size() << " artifacts to " << repro.outdir << "\n";
      return kExitOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << "qsphere 0.1.0\n";
    return kExitOk;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const CLI::ConversionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    return action(out);
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const nlohmann::json::exception& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace qsphere::cli
