#pragma once

#include <string>
#include <vector>

#include "qsphere/multipoly.hpp"

namespace qsphere {

/// Plane algebraic curve F(x0, x1, x2) = 0.
struct PlaneCurve {
  MultiPoly F{3};
  int order = 0;
  /// Multiplicity of the absolute points (0 : 1 : +-i), computed on
  /// construction.
  int circularity = 0;

  MultiPoly affine() const { return dehomogenize(F); }
  bool entirely_circular() const { return order == 2 * circularity; }
};

/// (x^2 + y^2)^n + f_n(x, y) = 0 homogenized to degree 2n. Throws
/// PreconditionError if f_n is zero, of the wrong degree, or divisible by
/// x^2 + y^2.
PlaneCurve circular_curve(int n, const HomogeneousForm& f_n);

/// Wraps an arbitrary affine polynomial in (x, y).
PlaneCurve plane_curve_from_affine(const MultiPoly& affine);

/// Largest q with (x1^2 + x2^2)^(q-j) dividing the x0^j coefficient form for
/// every j < q.
int plane_circularity(const PlaneCurve& curve);

/// The curve rho = (sin n phi)^(1/n), i.e. (x^2 + y^2)^n - Im (x + iy)^n = 0.
/// It is the equiangular-tangent curve up to a similarity.
PlaneCurve polar_family_curve(int n);

struct PlanarPolyline {
  std::vector<std::array<double, 2>> points;
  bool closed = false;
  int branch = 0;
};

struct PolarSampling {
  /// Uniform angular samples per petal before refinement.
  int samples_per_petal = 64;
  /// Consecutive points are refined until no farther apart than this.
  double max_step = 0.02;
};

/// Samples rho = (sin n phi)^(1/n) petal by petal, one polyline per interval
/// between consecutive zeros of sin(n phi). Odd n visits all 2n intervals
/// using the real (sign-preserving) n-th root; even n keeps only the
/// intervals where sin(n phi) >= 0.
std::vector<PlanarPolyline> polar_sample(int n, const PolarSampling& sampling = {});

/// Real intersections, other than the origin, of the full line through the
/// origin at angle phi with the curve; by exact Sturm counting on the
/// restricted polynomial (coefficients rounded from double once).
int real_ray_intersections(const PlaneCurve& curve, double phi);

struct SvgStyle {
  double stroke_width = 0.01;
  double margin = 0.05;
  std::string stroke = "black";
};

/// SVG 1.1 text with one path per polyline and a viewBox fitted to the
/// points. The y axis points up.
std::string render_svg(const std::vector<PlanarPolyline>& polylines, const SvgStyle& style = {});
/// Writes render_svg output; throws IoError if the file cannot be written.
void export_svg(const std::vector<PlanarPolyline>& polylines, const std::string& path, const SvgStyle& style = {});

}  // namespace qsphere
