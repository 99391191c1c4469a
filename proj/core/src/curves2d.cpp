#include "qsphere/curves2d.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>

#include "qsphere/constructors.hpp"
#include "qsphere/roots.hpp"

namespace qsphere {
namespace {

std::array<double, 2> polar_point(int n, double phi) {
  const double s = std::sin(n * phi);
  double rho = std::pow(std::abs(s), 1.0 / n);
  if (s < 0) rho = n % 2 == 1 ? -rho : 0.0;
  return {rho * std::cos(phi), rho * std::sin(phi)};
}

double distance(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  return std::hypot(a[0] - b[0], a[1] - b[1]);
}

void refine(int n, double phi_a, const std::array<double, 2>& a, double phi_b, const std::array<double, 2>& b,
            double max_step, int depth, std::vector<std::array<double, 2>>& out) {
  if (depth > 40 || distance(a, b) <= max_step) return;
  const double mid = 0.5 * (phi_a + phi_b);
  const auto m = polar_point(n, mid);
  refine(n, phi_a, a, mid, m, max_step, depth + 1, out);
  out.push_back(m);
  refine(n, mid, m, phi_b, b, max_step, depth + 1, out);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);
  return buf;
}

}  // namespace

PlaneCurve circular_curve(int n, const HomogeneousForm& f_n) {
  if (n < 1) throw PreconditionError("n >= 1", "got n = " + std::to_string(n));
  if (f_n.arity() != 2) throw PreconditionError("f_n is a form in x, y", "got arity " + std::to_string(f_n.arity()));
  if (f_n.is_zero()) throw PreconditionError("f_n != 0", "tangent form vanishes");
  if (f_n.degree() != n) {
    throw PreconditionError("deg f_n = n", "got degree " + std::to_string(f_n.degree()));
  }
  if (a2_multiplicity(f_n) != 0) {
    throw PreconditionError("x^2 + y^2 does not divide f_n", "the curve would split off isotropic lines");
  }
  PlaneCurve c;
  c.F = homogenize(pow(sum_of_squares(2), n) + f_n.poly(), 2 * n);
  c.order = 2 * n;
  c.circularity = plane_circularity(c);
  return c;
}

PlaneCurve plane_curve_from_affine(const MultiPoly& affine) {
  if (affine.arity() != 2) throw ArityError("plane_curve_from_affine: expected a polynomial in x, y");
  if (affine.is_zero()) throw PreconditionError("F != 0", "the zero polynomial defines no curve");
  PlaneCurve c;
  c.order = affine.total_degree();
  c.F = homogenize(affine, c.order);
  c.circularity = plane_circularity(c);
  return c;
}

int plane_circularity(const PlaneCurve& curve) { return isotropic_multiplicity(curve.F); }

PlaneCurve polar_family_curve(int n) {
  return circular_curve(n, HomogeneousForm(-harmonic_sin(n).poly(), n));
}

std::vector<PlanarPolyline> polar_sample(int n, const PolarSampling& sampling) {
  if (n < 2) throw PreconditionError("n >= 2", "got n = " + std::to_string(n));
  if (sampling.samples_per_petal < 2 || !(sampling.max_step > 0)) {
    throw PreconditionError("sampling density", "need at least 2 samples per petal and a positive step");
  }
  std::vector<PlanarPolyline> out;
  const double width = std::numbers::pi / n;
  for (int k = 0; k < 2 * n; ++k) {
    // sin(n phi) has sign (-1)^k on this interval.
    if (n % 2 == 0 && k % 2 == 1) continue;
    const double lo = k * width;
    const double hi = lo + width;
    const double sign = k % 2 == 1 ? -1.0 : 1.0;
    PlanarPolyline line;
    line.branch = k;
    // Near the origin rho = |sin(n phi)|^(1/n) is steep in phi, so the two
    // ends of a petal are parametrized by rho instead. Up to |sin| = 1/2 the
    // speed along rho stays below 2/sqrt(3).
    const double r_end = std::pow(0.5, 1.0 / n);
    const int end_steps = static_cast<int>(std::ceil(r_end * 1.16 / sampling.max_step));
    const auto by_radius = [&](double r, bool rising) {
      const double offset = std::asin(std::pow(r, n)) / n;
      const double phi = rising ? lo + offset : hi - offset;
      return std::array<double, 2>{sign * r * std::cos(phi), sign * r * std::sin(phi)};
    };
    for (int j = 0; j < end_steps; ++j) line.points.push_back(by_radius(r_end * j / end_steps, true));
    const double mid_lo = lo + std::numbers::pi / (6.0 * n);
    const double mid_hi = hi - std::numbers::pi / (6.0 * n);
    double prev_phi = mid_lo;
    auto prev = polar_point(n, mid_lo);
    line.points.push_back(prev);
    for (int j = 1; j <= sampling.samples_per_petal; ++j) {
      const double phi = mid_lo + (mid_hi - mid_lo) * j / sampling.samples_per_petal;
      const auto pt = polar_point(n, phi);
      refine(n, prev_phi, prev, phi, pt, sampling.max_step, 0, line.points);
      line.points.push_back(pt);
      prev_phi = phi;
      prev = pt;
    }
    for (int j = end_steps - 1; j >= 0; --j) line.points.push_back(by_radius(r_end * j / end_steps, false));
    out.push_back(std::move(line));
  }
  return out;
}

int real_ray_intersections(const PlaneCurve& curve, double phi) {
  const MultiPoly f = curve.affine();
  const Rational c(std::cos(phi));
  const Rational s(std::sin(phi));
  std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(f.total_degree(), 0)) + 1, Rational(0));
  for (const auto& [e, coeff] : f.terms()) {
    Rational term = coeff;
    for (int i = 0; i < e[0]; ++i) term *= c;
    for (int i = 0; i < e[1]; ++i) term *= s;
    coeffs[e[0] + e[1]] += term;
  }
  const UniPoly<Rational> restricted(std::move(coeffs));
  if (restricted.is_zero()) return -1;
  return count_distinct_real_roots(restricted.shift_down(restricted.zero_root_multiplicity()));
}

std::string render_svg(const std::vector<PlanarPolyline>& polylines, const SvgStyle& style) {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  for (const auto& line : polylines) {
    for (const auto& [x, y] : line.points) {
      min_x = std::min(min_x, x);
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, -y);
      max_y = std::max(max_y, -y);
    }
  }
  if (min_x > max_x) {
    min_x = min_y = 0.0;
    max_x = max_y = 1.0;
  }
  const double pad = style.margin * std::max({max_x - min_x, max_y - min_y, 1e-9});
  min_x -= pad;
  min_y -= pad;
  max_x += pad;
  max_y += pad;

  std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + fmt(min_x) + " " + fmt(min_y) +
         " " + fmt(max_x - min_x) + " " + fmt(max_y - min_y) + "\">\n";
  svg += "<g fill=\"none\" stroke=\"" + style.stroke + "\" stroke-width=\"" + fmt(style.stroke_width) +
         "\" stroke-linejoin=\"round\">\n";
  for (const auto& line : polylines) {
    if (line.points.empty()) continue;
    std::string d;
    for (std::size_t i = 0; i < line.points.size(); ++i) {
      d += (i == 0 ? "M" : " L") + fmt(line.points[i][0]) + " " + fmt(-line.points[i][1]);
    }
    if (line.closed) d += " Z";
    svg += "<path data-branch=\"" + std::to_string(line.branch) + "\" d=\"" + d + "\"/>\n";
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

void export_svg(const std::vector<PlanarPolyline>& polylines, const std::string& path, const SvgStyle& style) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << render_svg(polylines, style);
  if (!file) throw IoError("write to '" + path + "' failed");
}

}  // namespace qsphere
