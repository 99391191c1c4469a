#include <doctest.h>

#include "oracles.hpp"

using namespace qsphere;

namespace {

MultiPoly P(const char* text, int arity = 3) { return parse_polynomial(text, arity); }

const MultiPoly x = MultiPoly::variable(3, 0);
const MultiPoly y = MultiPoly::variable(3, 1);
const MultiPoly z = MultiPoly::variable(3, 2);
const MultiPoly A2 = sum_of_squares(3);

}  // namespace

TEST_CASE("add") {
  CHECK((P("x^2") + P("-x^2")).is_zero());
  CHECK(add(A2, MultiPoly(3)) == A2);
  CHECK(P("x*y") + P("x*y") == P("2*x*y"));
  CHECK_THROWS_AS(add(MultiPoly(2), MultiPoly(3)), ArityError);
}

TEST_CASE("mul") {
  CHECK(A2 * MultiPoly::constant(3, 1) == A2);
  CHECK((x + y) * (x - y) == P("x^2 - y^2"));
  CHECK(mul(A2, A2) == pow(A2, 2));
  CHECK_THROWS_AS(mul(MultiPoly(4), MultiPoly(3)), ArityError);
}

TEST_CASE("pow") {
  CHECK(pow(A2, 0) == MultiPoly::constant(3, 1));
  CHECK(pow(x + y, 2) == P("x^2 + 2xy + y^2"));
  CHECK(pow(A2, 3).term_count() == 10);
  CHECK(pow(A2, 3).term_count() == static_cast<std::size_t>(oracle::sum_of_squares_power_terms(3, 3)));
  for (int m = 0; m <= 6; ++m) {
    CHECK(pow(sum_of_squares(4), m).term_count() ==
          static_cast<std::size_t>(oracle::sum_of_squares_power_terms(4, m)));
  }
  CHECK_THROWS_AS(pow(A2, -1), std::invalid_argument);
}

TEST_CASE("partial") {
  const MultiPoly a2 = absolute_quadric(4);
  CHECK(partial(a2, 1) == MultiPoly::variable(4, 1) * Rational(2));
  CHECK(partial(a2, 0).is_zero());
  CHECK(partial(pow(A2, 2), 0) == Rational(4) * x * A2);
  CHECK_THROWS_AS(partial(A2, 3), std::out_of_range);
  CHECK(partial(P("x^3*y^2"), Exponents{2, 1, 0, 0}) == P("12*x*y"));
}

TEST_CASE("eval") {
  CHECK(eval<Rational>(A2, {Rational(1), Rational(0), Rational(0)}) == 1);
  CHECK(eval<GaussRational>(A2, {GaussRational(1), GaussRational(0, 1), GaussRational(0)}) == GaussRational(0));
  CHECK(eval<std::complex<double>>(A2, {1.0, {0.0, 1.0}, 0.0}) == std::complex<double>(0.0, 0.0));
  CHECK(eval<Rational>(P("x^2 - y^2", 2), {Rational(3), Rational(2)}) == 5);
  CHECK_THROWS_AS(eval<Rational>(A2, {Rational(1)}), ArityError);
}

TEST_CASE("decompose_by_x0") {
  const MultiPoly X0 = MultiPoly::variable(4, 0);
  const MultiPoly a2 = absolute_quadric(4);
  const MultiPoly xy = MultiPoly::variable(4, 1) * MultiPoly::variable(4, 2);

  const auto d = decompose_by_x0(pow(a2, 2) + pow(X0, 2) * xy, 4);
  CHECK(d.f(4).poly() == pow(A2, 2));
  CHECK(d.f(3).is_zero());
  CHECK(d.f(2).poly() == x * y);
  CHECK(d.f(1).is_zero());
  CHECK(d.f(0).is_zero());

  const auto sphere = decompose_by_x0(a2 - pow(X0, 2), 2);
  CHECK(sphere.f(2).poly() == A2);
  CHECK(sphere.f(1).is_zero());
  CHECK(sphere.f(0).poly() == MultiPoly::constant(3, -1));

  const auto only = decompose_by_x0(pow(X0, 4), 4);
  CHECK(only.f(0).poly() == MultiPoly::constant(3, 1));
  for (int k = 1; k <= 4; ++k) CHECK(only.f(k).is_zero());

  CHECK(reassemble(d) == pow(a2, 2) + pow(X0, 2) * xy);
  CHECK_THROWS_AS(decompose_by_x0(a2 + X0, 2), PreconditionError);
}

TEST_CASE("a2_multiplicity") {
  CHECK(a2_multiplicity(pow(A2, 2) * x * y) == 2);
  CHECK(a2_multiplicity(x * y) == 0);
  CHECK(a2_multiplicity(pow(A2, 3)) == 3);
  CHECK(a2_multiplicity(MultiPoly(3)) == kInfiniteMultiplicity);
}

TEST_CASE("divide_exact") {
  CHECK(divide_exact(A2 * x * y, A2) == x * y);
  CHECK_FALSE(divide_exact(x * y, A2).has_value());
  CHECK(divide_exact(MultiPoly(3), A2) == MultiPoly(3));
  CHECK_THROWS_AS(divide_exact(A2, MultiPoly(3)), std::invalid_argument);
  CHECK(divide_exact(P("x^2 - y^2"), x + y) == x - y);
}

TEST_CASE("homogenize") {
  CHECK(homogenize(A2 - MultiPoly::constant(3, 1), 2) == absolute_quadric(4) - pow(MultiPoly::variable(4, 0), 2));
  CHECK(homogenize(MultiPoly::constant(3, 1), 2) == pow(MultiPoly::variable(4, 0), 2));
  CHECK(dehomogenize(homogenize(A2, 2)) == A2);
  const MultiPoly f = P("x^3 - 2y + 1/2");
  CHECK(dehomogenize(homogenize(f, 5)) == f);
  CHECK_THROWS_AS(homogenize(f, 2), PreconditionError);
}

TEST_CASE("homogeneous form validation") {
  CHECK_THROWS_AS(HomogeneousForm(P("x^2 + y"), 2), PreconditionError);
  CHECK(HomogeneousForm(P("x*y")).degree() == 2);
  CHECK(HomogeneousForm(MultiPoly(3)).degree() == 0);
}

TEST_CASE("text round trip") {
  const MultiPoly f = P("-2x^3 - x^2 z + 2y^2 z + x z^2 + 3/4");
  CHECK(parse_polynomial(to_string(f), 3) == f);
  CHECK(to_string(P("2*x*y - 4*z^2")) == "2*x*y - 4*z^2");
  CHECK(to_string(MultiPoly(3)) == "0");
  CHECK(P("(x + y)^2 / 2") == P("x^2/2 + x y + y^2/2"));
  CHECK_THROWS_AS(P("x / y"), ParseError);
  CHECK_THROWS_AS(P("x +"), ParseError);
  CHECK_THROWS_AS(P("w"), ParseError);
  CHECK_THROWS_AS(P("x^-1"), ParseError);
}

TEST_CASE("rationals") {
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("2.5") == Rational(5, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK(to_string(parse_rational("6/4")) == "3/2");
}

TEST_CASE("isotropic multiplicity") {
  const MultiPoly X0 = MultiPoly::variable(4, 0);
  const MultiPoly a2 = absolute_quadric(4);
  CHECK(isotropic_multiplicity(a2 - pow(X0, 2)) == 1);
  CHECK(isotropic_multiplicity(pow(a2, 2) + pow(X0, 2) * MultiPoly::variable(4, 1) * MultiPoly::variable(4, 2)) == 2);
  // Ellipsoid misses the absolute conic.
  const MultiPoly e = pow(MultiPoly::variable(4, 1), 2) + Rational(2) * pow(MultiPoly::variable(4, 2), 2) +
                      pow(MultiPoly::variable(4, 3), 2) - pow(X0, 2);
  CHECK(isotropic_multiplicity(e) == 0);
}
