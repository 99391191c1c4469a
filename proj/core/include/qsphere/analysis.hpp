#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "qsphere/constructors.hpp"
#include "qsphere/roots.hpp"

namespace qsphere {

/// Homogeneous coordinates (x0 : x1 : x2 : x3); x0 = 0 is the plane at infinity.
using ProjectivePoint = std::array<Rational, 4>;
using AffinePoint = std::array<Rational, 3>;

inline ProjectivePoint affine_point(const Rational& x, const Rational& y, const Rational& z) {
  return {Rational(1), x, y, z};
}

struct MultiplicityReport {
  ProjectivePoint point;
  int multiplicity = 0;
  /// Lowest-degree part of F after moving the point to the affine origin of
  /// its chart. For finite points the variables are (x, y, z); for points at
  /// infinity the chart swaps x0 with the first nonzero coordinate.
  HomogeneousForm tangent_cone;
};

/// Exact multiplicity of S at a rational point. Throws PreconditionError if
/// the point is zero or does not lie on S.
MultiplicityReport point_multiplicity(const Surface& s, const ProjectivePoint& point);

/// Multiplicity at a complex point (e.g. on the absolute conic), from the
/// first derivative order with a value above rel_tol times the derivative's
/// coefficient mass. A numeric check, not an exact one.
int point_multiplicity_numeric(const Surface& s, const std::array<Complex, 4>& point, double rel_tol = 1e-9);

/// Multiplicity q of the absolute conic x0 = 0, x1^2 + x2^2 + x3^2 = 0 on S.
int absolute_multiplicity(const Surface& s);
bool is_q_spherical(const Surface& s, int q);
/// Order equals twice the absolute multiplicity.
bool is_entirely_spherical(const Surface& s);

struct LineIntersection {
  /// F(point + t * direction) with exact coefficients.
  UniPoly<Rational> poly;
  /// The whole line lies on S (poly is identically zero).
  bool line_on_surface = false;
  /// Exact multiplicity of t = 0.
  int zero_multiplicity = 0;
  /// All roots with multiplicity, t = 0 first when present.
  std::vector<RootCluster> roots;
};

/// Throws PreconditionError for a zero direction.
LineIntersection line_intersection_polynomial(const Surface& s, const AffinePoint& point,
                                              const AffinePoint& direction);

struct LineFan {
  /// Projective directions, scaled so the first non-negligible component is 1.
  std::vector<std::array<Complex, 3>> directions;
  std::vector<int> multiplicities;
  /// Sum of multiplicities.
  int count = 0;
  bool conjugate_paired = false;
  /// Largest of |A2(d)| and |f_n(d)| over the returned directions.
  double max_residual = 0.0;
};

/// Common directions of the isotropic cone and the cone f_n = 0, counted
/// with intersection multiplicity. Throws PreconditionError if A2 | f_n.
LineFan isotropic_directions(const HomogeneousForm& f_n);

/// Lines through the n-fold origin of a one-point surface A2^n + f_n = 0.
/// Throws PreconditionError if S is not of that shape.
LineFan lines_through_origin(const Surface& s);

struct SectionCircle {
  /// rho_T: one n-th root of sin(n phi).
  Complex rho_t;
  Complex rho_center;
  double z_center = 0.0;
  Complex radius_sq;
  bool real = false;
};

struct CircleSection {
  double phi = 0.0;
  std::vector<SectionCircle> circles;
  /// Distinct real circles. A degenerate section (sin n phi = 0) has a single
  /// real circle through both singular points.
  int real_count = 0;
  bool degenerate = false;
  /// Max coefficient difference between the section polynomial of F and the
  /// product of the circle quadratics rho^2 - rho_T rho + z^2 - p z.
  double residual = 0.0;
};

/// Section of a two-point surface by the plane through the z-axis at angle
/// phi, in the plane's coordinates (rho, z) with x = rho cos phi,
/// y = rho sin phi. Throws PreconditionError if S is not a two-point surface.
CircleSection axial_section(const Surface& s, double phi);

struct ExactCircle {
  Rational rho_center;
  Rational z_center;
  Rational radius_sq;
};
/// Circle through (0, 0) and (0, p) of the (rho, z) plane meeting the base
/// curve at rho_t: center (rho_t / 2, p / 2), radius^2 = rho_t^2/4 + p^2/4.
ExactCircle section_circle(const Rational& rho_t, const Rational& p);

struct AuditEntry {
  ProjectivePoint point;
  bool on_surface = false;
  int multiplicity = 0;
  bool exceeds_bound = false;
  /// Set when the bound is exceeded at a finite point: whether the isotropic
  /// cone with vertex there splits off S.
  std::optional<bool> splits_isotropic_cone;
};

struct AuditReport {
  int bound = 0;
  std::vector<AuditEntry> entries;
  /// No point exceeds the bound without the forced split.
  bool consistent = true;
};

/// Checks candidate points of an entirely spherical surface of order 2n
/// against the bound n on singular point multiplicity. Sampling only.
AuditReport max_multiplicity_audit(const Surface& s, std::span<const ProjectivePoint> candidates);

/// Number of unordered partitions of n >= 1 (Euler's pentagonal recurrence).
Integer partition_count(int n);

struct FactorScan {
  /// Primitive integer linear forms, in discovery order, with repetition.
  std::vector<MultiPoly> linear_factors;
  MultiPoly residual;
  /// Degrees of the found pieces, ascending: 1 per linear factor plus the
  /// residual degree when positive.
  std::vector<int> signature;
  /// A residual of degree >= 2 remains, so the signature may be coarser
  /// than the true splitting type.
  bool partial = false;
};

/// Extracts rational linear factors of a ternary (or binary) form by trying
/// primitive integer forms with coefficients up to `height` in absolute value.
FactorScan tangent_cone_factor_scan(const HomogeneousForm& cone, int height = 6);

}  // namespace qsphere
