#pragma once

#include <optional>
#include <span>
#include <string>

#include "qsphere/multipoly.hpp"
#include "qsphere/univariate.hpp"

namespace qsphere {

enum class Provenance { General, OnePoint, TwoPoint, Custom };

std::string to_string(Provenance provenance);
/// Inverse of to_string; throws ParseError for unknown names.
Provenance parse_provenance(std::string_view name);

/// An algebraic surface F(x0, x1, x2, x3) = 0 in projective 3-space.
struct Surface {
  MultiPoly F{4};
  int order = 0;
  /// Multiplicity of the absolute conic promised by the constructor.
  std::optional<int> claimed_q;
  Provenance provenance = Provenance::Custom;
  /// Distance parameter of the two-point family.
  std::optional<Rational> p;

  /// F(1, x, y, z).
  MultiPoly affine() const { return dehomogenize(F); }
};

/// Wraps an arbitrary homogeneous quaternary form. Throws PreconditionError
/// if F is zero, not homogeneous, or not of arity 4.
Surface make_surface(MultiPoly F);
/// Homogenizes an affine polynomial in (x, y, z) to its total degree.
Surface surface_from_affine(const MultiPoly& affine);

/// Lifts a form in (x, y, z) into the quaternary chart, multiplied by x0^j.
MultiPoly lift_with_x0(const MultiPoly& form, int j);
/// Embeds a binary form in (x, y) into (x, y, z).
MultiPoly binary_to_ternary(const MultiPoly& form);

/// Surface of order n containing the absolute conic with multiplicity q:
///
///   A2^q g_{n-2q} + sum_{j=1}^{q-1} x0^j A2^(q-j) g_{n-2q+j}
///                 + sum_{j=q}^{n} x0^j f_{n-j}
///
/// `g_middle[j-1]` is g_{n-2q+j} for j = 1..q-1 and `f_tail[j-q]` is
/// f_{n-j} for j = q..n. All forms are ternary in (x, y, z). Each violated
/// hypothesis is reported by name through PreconditionError. f_{n-q} may be
/// zero; when it is not, A2 must not divide it.
Surface general_q_spherical(int n, int q, const HomogeneousForm& g_lead,
                            std::span<const HomogeneousForm> g_middle,
                            std::span<const HomogeneousForm> f_tail);

/// A2^n + f_n = 0, homogenized to degree 2n: an n-spherical surface of order
/// 2n whose only singular point is an n-fold point at the origin with
/// tangent cone f_n = 0.
Surface one_point_surface(int n, const HomogeneousForm& f_n);

/// Im (x + i y)^n = rho^n sin(n phi), integer coefficients.
HomogeneousForm harmonic_sin(int n);

/// Chebyshev polynomials of the first and second kind, by the three-term
/// recurrence.
UniPoly<Rational> chebyshev_first(int n);
UniPoly<Rational> chebyshev_second(int n);

/// rho^n sin(n phi) written through the multiple-angle formulas:
///   odd n:  (-1)^((n-1)/2) rho^n T_n(y / rho)
///   even n: (-1)^(n/2-1) x rho^(n-1) U_{n-1}(y / rho)
/// with rho = sqrt(x^2 + y^2). The half-integer powers of x^2 + y^2 cancel;
/// the result is cross-checked against harmonic_sin and a mismatch throws
/// std::logic_error.
HomogeneousForm g_form(int n);

struct TwoPointParams {
  int n = 2;
  Rational p = 1;

  /// Throws PreconditionError naming "n >= 2" or "p > 0".
  void validate() const;
};

/// The union of circles through O = (0,0,0) and P = (0,0,p) meeting the
/// curve rho = (sin n phi)^(1/n) in the plane z = 0:
///
///   A2^n + sum_{j=1}^{n-1} C(n,j) (-p z)^j A2^(n-j) - G^n(x, y) + (-p z)^n = 0,
///
/// homogenized to degree 2n. O and P are n-fold points, the absolute conic
/// is n-fold, and F is symmetric under z -> p - z.
Surface two_point_surface(const TwoPointParams& params);

/// G^n(x, y) - (-p z)^n, the tangent cone of the two-point surface at O.
HomogeneousForm tangent_cone_two_point(const TwoPointParams& params);

/// prod_{i=0}^{n-1} (cos(i theta) y - sin(i theta) x) with theta = 2 pi / n
/// for odd n and pi / n for even n: the n tangent lines dividing the plane
/// into equal angles. Returned exactly as
///   -2^(1-n) S_n                 (n even)
///   (-1)^((n-1)/2) 2^(1-n) S_n   (n odd),  S_n = harmonic_sin(n),
/// after a numeric comparison against the literal product at ten random
/// points (std::logic_error on disagreement beyond 1e-12).
HomogeneousForm equiangular_f(int n);

/// Orders and multiplicities of a circular surface generated by circles
/// through two fixed axis points meeting an order-m curve that cuts the axis
/// z' times, the absolute conic in a' pairs of points, and passes p1'- and
/// p2'-fold through the two fixed points.
struct CSOrderReport {
  int m = 0;
  int z_axis = 0;
  int a_pairs = 0;
  int p1_fold = 0;
  int p2_fold = 0;
  int surface_order = 0;
  int absolute_mult = 0;
  int axis_mult = 0;
  int point_mult = 0;
};

/// Throws PreconditionError on negative inputs or a negative result.
CSOrderReport cs_order_report(int m, int z_axis, int a_pairs, int p1_fold, int p2_fold);

}  // namespace qsphere
