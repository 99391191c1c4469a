#include "qsphere/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace qsphere {
namespace {

MultiPoly swap_variables(const MultiPoly& f, int i, int j) {
  std::vector<MultiPoly> subs;
  for (int v = 0; v < f.arity(); ++v) {
    const int target = v == i ? j : (v == j ? i : v);
    subs.push_back(MultiPoly::variable(f.arity(), target));
  }
  return compose(f, subs);
}

MultiPoly translate(const MultiPoly& f, std::span<const Rational> offset) {
  std::vector<MultiPoly> subs;
  for (int v = 0; v < f.arity(); ++v) {
    subs.push_back(MultiPoly::variable(f.arity(), v) + MultiPoly::constant(f.arity(), offset[v]));
  }
  return compose(f, subs);
}

// Affine chart of a projective point: swaps x0 with the first nonzero
// coordinate when the point is at infinity.
struct Chart {
  MultiPoly affine;
  std::array<Rational, 3> point;
  bool finite = true;
};

Chart chart_for(const Surface& s, const ProjectivePoint& pt) {
  int pivot = -1;
  for (int i = 0; i < 4; ++i) {
    if (pt[i] != 0) {
      pivot = i;
      break;
    }
  }
  if (pivot < 0) throw PreconditionError("point != 0", "(0:0:0:0) is not a projective point");
  ProjectivePoint q = pt;
  MultiPoly F = s.F;
  if (pivot != 0) {
    std::swap(q[0], q[pivot]);
    F = swap_variables(F, 0, pivot);
  }
  Chart c;
  c.affine = dehomogenize(F);
  for (int i = 0; i < 3; ++i) c.point[i] = q[i + 1] / q[0];
  c.finite = pivot == 0;
  return c;
}

double coefficient_mass(const MultiPoly& f) {
  double mass = 0.0;
  for (const auto& [e, c] : f.terms()) mass += std::abs(c.get_d());
  return mass;
}

std::array<Complex, 3> normalize_direction(std::array<Complex, 3> d) {
  double largest = 0.0;
  for (const auto& c : d) largest = std::max(largest, std::abs(c));
  for (const auto& c : d) {
    if (std::abs(c) > 1e-9 * largest) {
      const Complex lead = c;
      for (auto& v : d) v /= lead;
      break;
    }
  }
  return d;
}

using Dense2 = std::vector<std::vector<Complex>>;

Dense2 dense_product(const Dense2& a, const Dense2& b) {
  Dense2 out(a.size() + b.size() - 1, std::vector<Complex>(a[0].size() + b[0].size() - 1, 0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != Complex(0.0))
        for (std::size_t k = 0; k < b.size(); ++k)
          for (std::size_t l = 0; l < b[k].size(); ++l) out[i + k][j + l] += a[i][j] * b[k][l];
  return out;
}

}  // namespace

MultiplicityReport point_multiplicity(const Surface& s, const ProjectivePoint& point) {
  if (eval<Rational>(s.F, std::span<const Rational>(point)) != 0) {
    throw PreconditionError("P on S", "F does not vanish at the given point");
  }
  const Chart chart = chart_for(s, point);
  const MultiPoly local = translate(chart.affine, chart.point);
  const int k = local.min_total_degree();
  MultiplicityReport report;
  report.point = point;
  report.multiplicity = k;
  report.tangent_cone = HomogeneousForm(local.homogeneous_part(k), k);
  return report;
}

int point_multiplicity_numeric(const Surface& s, const std::array<Complex, 4>& point, double rel_tol) {
  std::array<Complex, 4> unit = point;
  double largest = 0.0;
  for (const auto& c : unit) largest = std::max(largest, std::abs(c));
  if (largest == 0.0) throw PreconditionError("point != 0", "(0:0:0:0) is not a projective point");
  for (auto& c : unit) c /= largest;

  for (int k = 0; k <= s.order; ++k) {
    for (int a = 0; a <= k; ++a)
      for (int b = 0; a + b <= k; ++b)
        for (int c = 0; a + b + c <= k; ++c) {
          const Exponents orders{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
                                 static_cast<std::uint16_t>(c), static_cast<std::uint16_t>(k - a - b - c)};
          const MultiPoly d = partial(s.F, orders);
          if (d.is_zero()) continue;
          const Complex value = eval<Complex>(d, std::span<const Complex>(unit));
          if (std::abs(value) > rel_tol * coefficient_mass(d)) return k;
        }
  }
  return s.order;
}

int absolute_multiplicity(const Surface& s) { return isotropic_multiplicity(s.F); }

bool is_q_spherical(const Surface& s, int q) { return absolute_multiplicity(s) >= q; }

bool is_entirely_spherical(const Surface& s) {
  const int q = absolute_multiplicity(s);
  return q != kInfiniteMultiplicity && s.order == 2 * q;
}

LineIntersection line_intersection_polynomial(const Surface& s, const AffinePoint& point,
                                              const AffinePoint& direction) {
  if (std::all_of(direction.begin(), direction.end(), [](const Rational& v) { return v == 0; })) {
    throw PreconditionError("d != 0", "the direction vector vanishes");
  }
  const MultiPoly f = s.affine();
  std::array<std::vector<UniPoly<Rational>>, 3> powers;
  for (int v = 0; v < 3; ++v) {
    const UniPoly<Rational> coord(std::vector<Rational>{point[v], direction[v]});
    powers[v].push_back(UniPoly<Rational>::constant(1));
    for (int e = 1; e <= f.degree_in(v); ++e) powers[v].push_back(powers[v].back() * coord);
  }
  UniPoly<Rational> poly;
  for (const auto& [e, c] : f.terms()) {
    UniPoly<Rational> term = UniPoly<Rational>::constant(c);
    for (int v = 0; v < 3; ++v) {
      if (e[v] != 0) term = term * powers[v][e[v]];
    }
    poly = poly + term;
  }

  LineIntersection out;
  out.poly = poly;
  if (poly.is_zero()) {
    out.line_on_surface = true;
    return out;
  }
  out.zero_multiplicity = poly.zero_root_multiplicity();
  if (out.zero_multiplicity > 0) out.roots.push_back({Complex(0.0), out.zero_multiplicity});
  for (const auto& r : exact_roots(poly.shift_down(out.zero_multiplicity))) out.roots.push_back(r);
  return out;
}

LineFan isotropic_directions(const HomogeneousForm& f_n) {
  if (f_n.arity() != 3) throw ArityError("isotropic_directions: expected a form in x, y, z");
  if (f_n.is_zero()) throw PreconditionError("f_n != 0", "the tangent cone form vanishes");
  const int n = f_n.degree();

  // The isotropic conic a^2 + b^2 + c^2 = 0 is covered by
  // s -> (1 - s^2, 2s, i(1 + s^2)), missing only (1 : 0 : -i) at s = infinity.
  const GaussRational i_unit(0, 1);
  const std::array<UniPoly<GaussRational>, 3> coords{
      UniPoly<GaussRational>(std::vector<GaussRational>{1, 0, -1}),
      UniPoly<GaussRational>(std::vector<GaussRational>{0, 2}),
      UniPoly<GaussRational>(std::vector<GaussRational>{i_unit, 0, i_unit}),
  };
  std::array<std::vector<UniPoly<GaussRational>>, 3> powers;
  for (int v = 0; v < 3; ++v) {
    powers[v].push_back(UniPoly<GaussRational>::constant(1));
    for (int e = 1; e <= n; ++e) powers[v].push_back(powers[v].back() * coords[v]);
  }
  UniPoly<GaussRational> restricted;
  for (const auto& [e, c] : f_n.poly().terms()) {
    UniPoly<GaussRational> term = UniPoly<GaussRational>::constant(GaussRational(c));
    for (int v = 0; v < 3; ++v) term = term * powers[v][e[v]];
    restricted = restricted + term;
  }
  if (restricted.is_zero()) {
    throw PreconditionError("A2 does not divide f_n", "the tangent cone contains the isotropic cone");
  }

  LineFan fan;
  for (const auto& root : exact_roots(restricted)) {
    const Complex s = root.value;
    fan.directions.push_back(normalize_direction({1.0 - s * s, 2.0 * s, Complex(0, 1) * (1.0 + s * s)}));
    fan.multiplicities.push_back(root.multiplicity);
  }
  if (const int at_infinity = 2 * n - restricted.degree(); at_infinity > 0) {
    fan.directions.push_back({Complex(1.0), Complex(0.0), Complex(0, -1)});
    fan.multiplicities.push_back(at_infinity);
  }
  fan.count = std::accumulate(fan.multiplicities.begin(), fan.multiplicities.end(), 0);

  const MultiPoly a2 = absolute_quadric(3);
  for (const auto& d : fan.directions) {
    fan.max_residual = std::max({fan.max_residual, std::abs(eval<Complex>(a2, std::span<const Complex>(d))),
                                 std::abs(eval<Complex>(f_n.poly(), std::span<const Complex>(d)))});
  }

  fan.conjugate_paired = true;
  for (std::size_t i = 0; i < fan.directions.size(); ++i) {
    const auto& d = fan.directions[i];
    const std::array<Complex, 3> conj{std::conj(d[0]), std::conj(d[1]), std::conj(d[2])};
    bool found = false;
    for (std::size_t j = 0; j < fan.directions.size() && !found; ++j) {
      double gap = 0.0;
      for (int v = 0; v < 3; ++v) gap = std::max(gap, std::abs(conj[v] - fan.directions[j][v]));
      found = gap < 1e-6 && fan.multiplicities[i] == fan.multiplicities[j];
    }
    fan.conjugate_paired = fan.conjugate_paired && found;
  }
  return fan;
}

LineFan lines_through_origin(const Surface& s) {
  const MultiPoly f = s.affine();
  const int n = s.order / 2;
  if (s.order % 2 != 0 || n < 1) throw PreconditionError("order 2n", "one-point surfaces have even order");
  const MultiPoly f_n = f.homogeneous_part(n);
  if (f_n.is_zero() || !(f == pow(absolute_quadric(3), n) + f_n)) {
    throw PreconditionError("S is A2^n + f_n", "surface is not of the one-point form");
  }
  return isotropic_directions(HomogeneousForm(f_n, n));
}

CircleSection axial_section(const Surface& s, double phi) {
  if (s.provenance != Provenance::TwoPoint || !s.p) {
    throw PreconditionError("two-point surface", "axial sections need the two-point family");
  }
  const int n = s.order / 2;
  const double p = s.p->get_d();
  const double sine = std::sin(n * phi);

  CircleSection out;
  out.phi = phi;
  out.degenerate = std::abs(sine) < 1e-15;
  const double radius = out.degenerate ? 0.0 : std::pow(std::abs(sine), 1.0 / n);
  const double base = sine < 0 ? std::numbers::pi : 0.0;
  std::vector<double> real_values;
  for (int k = 0; k < n; ++k) {
    SectionCircle c;
    c.rho_t = out.degenerate ? Complex(0.0) : std::polar(radius, (base + 2.0 * std::numbers::pi * k) / n);
    if (std::abs(c.rho_t.imag()) <= 1e-12 * std::max(radius, 1e-300)) {
      c.rho_t = c.rho_t.real();
      c.real = true;
    }
    c.rho_center = c.rho_t / 2.0;
    c.z_center = p / 2.0;
    c.radius_sq = c.rho_t * c.rho_t / 4.0 + p * p / 4.0;
    if (c.real &&
        std::none_of(real_values.begin(), real_values.end(), [&](double v) { return std::abs(v - c.rho_t.real()) < 1e-12; })) {
      real_values.push_back(c.rho_t.real());
    }
    out.circles.push_back(c);
  }
  out.real_count = static_cast<int>(real_values.size());

  // Section polynomial: x = rho cos(phi), y = rho sin(phi), coefficients in (rho, z).
  const MultiPoly f = s.affine();
  const std::size_t size = static_cast<std::size_t>(s.order) + 1;
  Dense2 section(size, std::vector<Complex>(size, 0.0));
  const double cx = std::cos(phi);
  const double sy = std::sin(phi);
  for (const auto& [e, c] : f.terms()) {
    section[e[0] + e[1]][e[2]] += c.get_d() * std::pow(cx, e[0]) * std::pow(sy, e[1]);
  }
  Dense2 product{{Complex(1.0)}};
  for (const auto& c : out.circles) {
    // rho^2 - rho_T rho + z^2 - p z
    Dense2 quad(3, std::vector<Complex>(3, 0.0));
    quad[2][0] = 1.0;
    quad[1][0] = -c.rho_t;
    quad[0][2] = 1.0;
    quad[0][1] = -p;
    product = dense_product(product, quad);
  }
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) {
      const Complex prod = i < product.size() && j < product[i].size() ? product[i][j] : Complex(0.0);
      out.residual = std::max(out.residual, std::abs(section[i][j] - prod));
    }
  return out;
}

ExactCircle section_circle(const Rational& rho_t, const Rational& p) {
  return {rho_t / 2, p / 2, rho_t * rho_t / 4 + p * p / 4};
}

AuditReport max_multiplicity_audit(const Surface& s, std::span<const ProjectivePoint> candidates) {
  if (!is_entirely_spherical(s)) {
    throw PreconditionError("S entirely spherical", "order must equal twice the absolute multiplicity");
  }
  AuditReport report;
  report.bound = s.order / 2;
  for (const auto& pt : candidates) {
    AuditEntry entry;
    entry.point = pt;
    entry.on_surface = eval<Rational>(s.F, std::span<const Rational>(pt)) == 0;
    if (entry.on_surface) {
      entry.multiplicity = point_multiplicity(s, pt).multiplicity;
      entry.exceeds_bound = entry.multiplicity > report.bound;
      if (entry.exceeds_bound && pt[0] != 0) {
        const Chart chart = chart_for(s, pt);
        const MultiPoly local = translate(chart.affine, chart.point);
        entry.splits_isotropic_cone = divide_exact(local, absolute_quadric(3)).has_value();
      }
      if (entry.exceeds_bound && !entry.splits_isotropic_cone.value_or(false)) report.consistent = false;
    }
    report.entries.push_back(entry);
  }
  return report;
}

Integer partition_count(int n) {
  if (n < 1) throw PreconditionError("n >= 1", "got n = " + std::to_string(n));
  std::vector<Integer> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Integer acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const int g2 = k * (3 * k + 1) / 2;
      Integer term = p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) term += p[static_cast<std::size_t>(m - g2)];
      if (k % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    p[static_cast<std::size_t>(m)] = acc;
  }
  return p[static_cast<std::size_t>(n)];
}

FactorScan tangent_cone_factor_scan(const HomogeneousForm& cone, int height) {
  const int arity = cone.arity();
  if (arity != 2 && arity != 3) throw ArityError("tangent_cone_factor_scan: expected a binary or ternary form");

  std::vector<std::array<int, 3>> candidates;
  const int zmax = arity == 3 ? height : 0;
  for (int a = -height; a <= height; ++a)
    for (int b = -height; b <= height; ++b)
      for (int c = -zmax; c <= zmax; ++c) {
        const int lead = a != 0 ? a : (b != 0 ? b : c);
        if (lead <= 0) continue;
        if (std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c)) != 1) continue;
        candidates.push_back({a, b, c});
      }
  std::stable_sort(candidates.begin(), candidates.end(), [](const auto& u, const auto& v) {
    const auto h = [](const auto& w) { return std::max({std::abs(w[0]), std::abs(w[1]), std::abs(w[2])}); };
    return h(u) < h(v);
  });

  FactorScan scan;
  MultiPoly residual = cone.poly();
  for (const auto& [a, b, c] : candidates) {
    if (residual.total_degree() < 1) break;
    // Every point of the plane a x + b y + c z = 0 must be a zero.
    std::vector<std::vector<Rational>> probes;
    if (arity == 2) {
      probes.push_back({Rational(-b), Rational(a)});
    } else {
      std::array<Rational, 3> u, v;
      if (a != 0) {
        u = {Rational(-b), Rational(a), Rational(0)};
        v = {Rational(-c), Rational(0), Rational(a)};
      } else if (b != 0) {
        u = {Rational(1), Rational(0), Rational(0)};
        v = {Rational(0), Rational(-c), Rational(b)};
      } else {
        u = {Rational(1), Rational(0), Rational(0)};
        v = {Rational(0), Rational(1), Rational(0)};
      }
      for (const auto& [s, t] : {std::pair{1, 2}, std::pair{3, -1}, std::pair{1, -5}}) {
        probes.push_back({s * u[0] + t * v[0], s * u[1] + t * v[1], s * u[2] + t * v[2]});
      }
    }
    MultiPoly linear(arity);
    linear.add_term(Exponents{1, 0, 0, 0}, a);
    linear.add_term(Exponents{0, 1, 0, 0}, b);
    if (arity == 3) linear.add_term(Exponents{0, 0, 1, 0}, c);
    for (;;) {
      const bool vanishes = std::all_of(probes.begin(), probes.end(), [&](const auto& pt) {
        return eval<Rational>(residual, std::span<const Rational>(pt)) == 0;
      });
      if (!vanishes || residual.total_degree() < 1) break;
      auto quotient = divide_exact(residual, linear);
      if (!quotient) break;
      scan.linear_factors.push_back(linear);
      residual = std::move(*quotient);
    }
  }
  if (residual.total_degree() == 1) {
    scan.linear_factors.push_back(primitive_part(residual));
    residual = MultiPoly::constant(arity, divide_exact(residual, scan.linear_factors.back())->coefficient(Exponents{}));
  }
  scan.residual = residual;
  scan.signature.assign(scan.linear_factors.size(), 1);
  if (residual.total_degree() > 0) scan.signature.push_back(residual.total_degree());
  std::sort(scan.signature.begin(), scan.signature.end());
  scan.partial = residual.total_degree() >= 2;
  return scan;
}

}  // namespace qsphere
