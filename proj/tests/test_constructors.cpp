#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"

using namespace qsphere;

namespace {

MultiPoly P(const char* text, int arity = 3) { return parse_polynomial(text, arity); }
HomogeneousForm H(const char* text, int degree) { return HomogeneousForm(P(text), degree); }

}  // namespace

TEST_CASE("general_q_spherical examples") {
  const std::vector<HomogeneousForm> none;

  SUBCASE("unit sphere") {
    const std::vector<HomogeneousForm> tail{H("0", 1), H("-1", 0)};
    const Surface s = general_q_spherical(2, 1, H("1", 0), none, tail);
    CHECK(s.F == P("x1^2 + x2^2 + x3^2 - x0^2", 4));
    CHECK(absolute_multiplicity(s) == 1);
    CHECK(s.claimed_q == 1);
  }
  SUBCASE("quartic with q = 2") {
    const std::vector<HomogeneousForm> middle{H("0", 1)};
    const std::vector<HomogeneousForm> tail{H("x*y", 2), H("0", 1), H("0", 0)};
    const Surface s = general_q_spherical(4, 2, H("1", 0), middle, tail);
    CHECK(s.F == P("(x1^2 + x2^2 + x3^2)^2 + x0^2 x1 x2", 4));
    CHECK(absolute_multiplicity(s) == 2);
  }
  SUBCASE("named preconditions") {
    const std::vector<HomogeneousForm> tail{H("x^2 + y^2 + z^2", 2), H("0", 1), H("0", 0)};
    const std::vector<HomogeneousForm> middle{H("0", 1)};
    try {
      general_q_spherical(4, 2, H("1", 0), middle, tail);
      FAIL("expected a precondition error");
    } catch (const PreconditionError& e) {
      CHECK(e.condition() == "A2 does not divide f_{n-q}");
    }
    const std::vector<HomogeneousForm> tail1{H("x", 1), H("1", 0)};
    try {
      general_q_spherical(2, 1, H("0", 0), none, tail1);
      FAIL("expected a precondition error");
    } catch (const PreconditionError& e) {
      CHECK(e.condition() == "g_{n-2q} != 0");
    }
    const std::vector<HomogeneousForm> tail3{H("x^2", 2), H("x", 1), H("1", 0)};
    try {
      general_q_spherical(3, 1, H("x^2 + y^2 + z^2", 1), none, tail3);
      FAIL("expected a precondition error");
    } catch (const PreconditionError&) {
    }
    try {
      general_q_spherical(3, 2, H("1", 0), std::vector<HomogeneousForm>{H("0", 1)}, tail3);
      FAIL("expected a precondition error");
    } catch (const PreconditionError& e) {
      CHECK(e.condition() == "n >= 2q");
    }
  }
}

TEST_CASE("one_point_surface") {
  const Surface a = one_point_surface(2, H("x^2 + y^2 - z^2", 2));
  CHECK(a.affine() == P("(x^2 + y^2 + z^2)^2 + x^2 + y^2 - z^2"));
  CHECK(a.order == 4);
  CHECK(absolute_multiplicity(a) == 2);

  const Surface c = one_point_surface(3, H("-2x^3 - x^2 z + 2y^2 z + x z^2", 3));
  CHECK(c.order == 6);
  CHECK(point_multiplicity(c, affine_point(0, 0, 0)).multiplicity == 3);
  CHECK(absolute_multiplicity(c) == 3);

  // n = 1: sphere x^2 + y^2 + (z + 1/2)^2 = 1/4 through the origin.
  const Surface s = one_point_surface(1, H("z", 1));
  CHECK(s.affine() == P("x^2 + y^2 + (z + 1/2)^2 - 1/4"));

  CHECK_THROWS_AS(one_point_surface(2, H("x^2 + y^2 + z^2", 2)), PreconditionError);
  CHECK_THROWS_AS(one_point_surface(2, H("0", 2)), PreconditionError);
  CHECK_THROWS_AS(one_point_surface(3, H("x^2", 2)), PreconditionError);
}

TEST_CASE("harmonic_sin against the binomial expansion") {
  CHECK(harmonic_sin(2).poly() == P("2xy", 2));
  CHECK(harmonic_sin(3).poly() == P("3x^2 y - y^3", 2));
  CHECK(harmonic_sin(5).poly() == P("5x^4 y - 10x^2 y^3 + y^5", 2));
  for (int n = 1; n <= 14; ++n) {
    CHECK(harmonic_sin(n).poly() == oracle::binary_from_map(n, oracle::im_binomial_power(n)));
  }
  CHECK_THROWS_AS(harmonic_sin(0), PreconditionError);
}

TEST_CASE("chebyshev polynomials") {
  CHECK(chebyshev_first(2) == UniPoly<Rational>({-1, 0, 2}));
  CHECK(chebyshev_first(3) == UniPoly<Rational>({0, -3, 0, 4}));
  CHECK(chebyshev_second(3) == UniPoly<Rational>({0, -4, 0, 8}));
  // T_n(cos t) = cos(n t), U_n(cos t) sin t = sin((n + 1) t).
  for (int n = 0; n <= 12; ++n) {
    for (double t : {0.3, 1.1, 2.5}) {
      const Rational c(std::cos(t));
      CHECK(chebyshev_first(n).eval(c).get_d() == doctest::Approx(std::cos(n * t)).epsilon(1e-9));
      CHECK((chebyshev_second(n).eval(c).get_d() * std::sin(t)) ==
            doctest::Approx(std::sin((n + 1) * t)).epsilon(1e-9));
    }
  }
}

TEST_CASE("g_form equals harmonic_sin") {
  CHECK(g_form(2).poly() == P("2xy", 2));
  CHECK(g_form(3).poly() == P("3x^2 y - y^3", 2));
  CHECK(g_form(4).poly() == P("4x^3 y - 4x y^3", 2));
  for (int n = 2; n <= 12; ++n) CHECK(g_form(n) == harmonic_sin(n));
}

TEST_CASE("two_point_surface") {
  const Surface s = two_point_surface({2, Rational(2)});
  CHECK(s.affine() == P("(x^2+y^2+z^2)^2 - 4z(x^2+y^2+z^2) - 2xy + 4z^2"));
  CHECK(s.order == 4);
  CHECK(s.p == Rational(2));
  CHECK(s.provenance == Provenance::TwoPoint);

  CHECK_THROWS_AS(two_point_surface({1, Rational(2)}), PreconditionError);
  CHECK_THROWS_AS(two_point_surface({3, Rational(0)}), PreconditionError);
  CHECK_THROWS_AS(two_point_surface({3, Rational(-1, 2)}), PreconditionError);

  SUBCASE("properties over n and p") {
    for (int n = 2; n <= 8; ++n) {
      for (const Rational& p : {Rational(1), Rational(2), Rational(5, 2)}) {
        const Surface t = two_point_surface({n, p});
        CHECK(absolute_multiplicity(t) == n);
        CHECK(point_multiplicity(t, affine_point(0, 0, 0)).multiplicity == n);
        CHECK(point_multiplicity(t, affine_point(0, 0, p)).multiplicity == n);
        const MultiPoly f = t.affine();
        const std::vector<MultiPoly> flip{MultiPoly::variable(3, 0), MultiPoly::variable(3, 1),
                                          MultiPoly::constant(3, p) - MultiPoly::variable(3, 2)};
        CHECK(compose(f, flip) == f);
      }
    }
  }

  SUBCASE("cylindrical form") {
    oracle::Gen g(21);
    for (int n = 2; n <= 6; ++n) {
      const MultiPoly f = two_point_surface({n, Rational(5, 2)}).affine();
      for (int i = 0; i < 100; ++i) {
        const double rho = g.real(0.0, 1.5);
        const double phi = g.real(0.0, 2 * std::numbers::pi);
        const double zz = g.real(-1.0, 3.0);
        const double lhs = eval<double>(f, {rho * std::cos(phi), rho * std::sin(phi), zz});
        const double rhs = std::pow(rho * rho + zz * zz - 2.5 * zz, n) - std::pow(rho, n) * std::sin(n * phi);
        CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(rhs)));
      }
    }
  }
}

TEST_CASE("tangent_cone_two_point") {
  CHECK(tangent_cone_two_point({2, Rational(2)}).poly() == P("2xy - 4z^2"));
  CHECK(tangent_cone_two_point({4, Rational(2)}).poly() == P("4x^3 y - 4x y^3 - 16 z^4"));
  CHECK(tangent_cone_two_point({6, Rational(2)}).poly() == P("6x^5 y - 20x^3 y^3 + 6x y^5 - 64z^6"));
  CHECK(tangent_cone_two_point({3, Rational(2)}).poly() == P("3x^2 y - y^3 + 8z^3"));
  for (int n = 2; n <= 7; ++n) {
    const TwoPointParams params{n, Rational(3, 2)};
    const auto report = point_multiplicity(two_point_surface(params), affine_point(0, 0, 0));
    CHECK(proportional(report.tangent_cone.poly(), tangent_cone_two_point(params).poly()));
  }
}

TEST_CASE("equiangular_f") {
  CHECK(equiangular_f(2).poly() == P("-x y", 2));
  CHECK(equiangular_f(3).poly() == P("-1/4 (3x^2 y - y^3)", 2));
  for (int n = 2; n <= 8; ++n) {
    const MultiPoly f = equiangular_f(n).poly();
    CHECK(proportional(f, harmonic_sin(n).poly()));
    // Literal product of the n lines at a test point.
    const double theta = (n % 2 == 1 ? 2.0 : 1.0) * std::numbers::pi / n;
    const double x = 0.37;
    const double y = -1.21;
    double product = 1.0;
    for (int i = 0; i < n; ++i) product *= std::cos(i * theta) * y - std::sin(i * theta) * x;
    CHECK(eval<double>(f, {x, y}) == doctest::Approx(product).epsilon(1e-12));
  }
  // n = 4: the four lines at 45 degree steps.
  const MultiPoly f4 = equiangular_f(4).poly();
  for (int i = 0; i < 4; ++i) {
    const double a = i * std::numbers::pi / 4;
    CHECK(std::abs(eval<double>(f4, {std::cos(a), std::sin(a)})) < 1e-12);
  }
}

TEST_CASE("cs_order_report") {
  for (int n = 1; n <= 6; ++n) {
    const CSOrderReport r = cs_order_report(2 * n, 0, n, n, 0);
    CHECK(r.surface_order == 2 * n);
    CHECK(r.absolute_mult == n);
    CHECK(r.point_mult == n);
  }
  const CSOrderReport one = cs_order_report(1, 0, 0, 0, 0);
  CHECK(one.surface_order == 3);
  CHECK(one.absolute_mult == 1);
  CHECK(one.axis_mult == 1);
  CHECK(one.point_mult == 2);
  const CSOrderReport two = cs_order_report(2, 0, 1, 0, 0);
  CHECK(two.surface_order == 4);
  CHECK(two.absolute_mult == 2);
  CHECK_THROWS_AS(cs_order_report(-1, 0, 0, 0, 0), PreconditionError);
  CHECK_THROWS_AS(cs_order_report(1, 0, 0, 2, 2), PreconditionError);
}

TEST_CASE("surface JSON envelope") {
  const Surface s = two_point_surface({3, Rational(5, 2)});
  const Surface back = surface_from_json(surface_to_json(s));
  CHECK(back.F == s.F);
  CHECK(back.order == 6);
  CHECK(back.claimed_q == 3);
  CHECK(back.provenance == Provenance::TwoPoint);
  CHECK(back.p == Rational(5, 2));
  CHECK(surface_to_json(back) == surface_to_json(s));
  CHECK_THROWS_AS(surface_from_json("{\"polynomial\": 3}"), ParseError);
  CHECK_THROWS_AS(surface_from_json("not json"), ParseError);
  CHECK_THROWS_AS(poly_from_json(R"({"arity":3,"terms":[{"exp":[1,0],"num":"1","den":"1"}]})"), ParseError);
  CHECK_THROWS_AS(poly_from_json(R"({"arity":3,"terms":[{"exp":[1,0,0],"num":"1","den":"0"}]})"), ParseError);
  CHECK(poly_to_json(P("x*y - 1/2", 2)) ==
        R"({"arity":2,"terms":[{"den":"2","exp":[0,0],"num":"-1"},{"den":"1","exp":[1,1],"num":"1"}]})");
}
