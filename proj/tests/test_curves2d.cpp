#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"

using namespace qsphere;

namespace {

MultiPoly P2(const char* text) { return parse_polynomial(text, 2); }

}  // namespace

TEST_CASE("circular_curve") {
  const PlaneCurve circle = circular_curve(1, HomogeneousForm(P2("y"), 1));
  CHECK(circle.affine() == P2("x^2 + y^2 + y"));
  CHECK(circle.circularity == 1);
  CHECK(circle.entirely_circular());

  for (int n = 2; n <= 6; ++n) {
    const PlaneCurve c = circular_curve(n, equiangular_f(n));
    CHECK(c.order == 2 * n);
    CHECK(plane_circularity(c) == n);
    CHECK(c.entirely_circular());
  }

  CHECK_THROWS_AS(circular_curve(2, HomogeneousForm(P2("x^2 + y^2"), 2)), PreconditionError);
  CHECK_THROWS_AS(circular_curve(2, HomogeneousForm(P2("x"), 1)), PreconditionError);
  CHECK_THROWS_AS(circular_curve(2, HomogeneousForm(MultiPoly(2), 2)), PreconditionError);
}

TEST_CASE("plane_circularity") {
  CHECK(plane_circularity(plane_curve_from_affine(P2("x^2 + y^2 - 1"))) == 1);
  CHECK(plane_circularity(plane_curve_from_affine(P2("x^2 + 2y^2 - 1"))) == 0);
  CHECK(plane_circularity(plane_curve_from_affine(P2("(x^2 + y^2)^2 - x"))) == 2);
}

TEST_CASE("polar_sample") {
  const auto two = polar_sample(2);
  bool hit = false;
  for (const auto& line : two) {
    for (const auto& [x, y] : line.points) {
      if (std::abs(x - std::sqrt(0.5)) < 1e-12 && std::abs(y - std::sqrt(0.5)) < 1e-12) hit = true;
      // Even n: nothing in the quadrants where sin 2 phi < 0.
      CHECK(x * y >= -1e-12);
    }
  }
  CHECK(hit);

  for (int n = 2; n <= 8; ++n) {
    const MultiPoly f = polar_family_curve(n).affine();
    const auto lines = polar_sample(n);
    CHECK(static_cast<int>(lines.size()) == (n % 2 == 0 ? n : 2 * n));
    for (const auto& line : lines) {
      for (std::size_t i = 0; i < line.points.size(); ++i) {
        const auto& [x, y] = line.points[i];
        CHECK(std::abs(eval<double>(f, {x, y})) < 1e-9);
        if (i > 0) {
          const auto& prev = line.points[i - 1];
          CHECK(std::hypot(x - prev[0], y - prev[1]) <= 0.02 + 1e-12);
        }
      }
    }
  }

  // n = 3 at phi = pi/2: rho = -1, i.e. the point (0, -1).
  const MultiPoly f3 = polar_family_curve(3).affine();
  CHECK(eval<double>(f3, {0.0, -1.0}) == doctest::Approx(0.0));
  CHECK_THROWS_AS(polar_sample(1), PreconditionError);
}

TEST_CASE("real_ray_intersections") {
  const PlaneCurve c3 = polar_family_curve(3);
  const PlaneCurve c2 = polar_family_curve(2);
  CHECK(real_ray_intersections(c3, 0.4) == 1);
  CHECK(real_ray_intersections(c2, std::numbers::pi / 4) == 2);
  CHECK(real_ray_intersections(c2, 3 * std::numbers::pi / 4) == 0);

  for (int n = 2; n <= 7; ++n) {
    const PlaneCurve c = polar_family_curve(n);
    for (int k = 0; k < 360; ++k) {
      const double phi = (k + 0.5) * std::numbers::pi / 180.0;
      const int count = real_ray_intersections(c, phi);
      if (n % 2 == 1) {
        CHECK(count == 1);
      } else {
        CHECK((count == 0 || count == 2));
      }
    }
  }
}

TEST_CASE("svg output") {
  const auto lines = polar_sample(3);
  const std::string svg = render_svg(lines);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("viewBox=") != std::string::npos);
  std::size_t paths = 0;
  for (std::size_t at = svg.find("<path"); at != std::string::npos; at = svg.find("<path", at + 1)) ++paths;
  CHECK(paths == lines.size());
  CHECK(render_svg(lines) == svg);
  SvgStyle thick;
  thick.stroke_width = 0.5;
  CHECK(render_svg(lines, thick).find("stroke-width=\"0.500000\"") != std::string::npos);
  CHECK_THROWS_AS(export_svg(lines, "/nonexistent-dir/x.svg"), IoError);
}
