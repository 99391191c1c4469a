#include "qsphere/constructors.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qsphere {
namespace {

Rational binomial(int n, int k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(out);
}

Rational power_of_two(int e) {
  Integer v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(std::abs(e)));
  return e >= 0 ? Rational(v) : Rational(Integer(1), v);
}

void require(bool ok, const std::string& condition, const std::string& detail) {
  if (!ok) throw PreconditionError(condition, detail);
}

void require_ternary(const HomogeneousForm& f, int degree, const std::string& name) {
  require(f.arity() == 3, name + " is a form in x, y, z", "got arity " + std::to_string(f.arity()));
  require(f.is_zero() || f.degree() == degree, "deg " + name + " = " + std::to_string(degree),
          "got degree " + std::to_string(f.degree()));
}

}  // namespace

std::string to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::General: return "general";
    case Provenance::OnePoint: return "one-point";
    case Provenance::TwoPoint: return "two-point";
    case Provenance::Custom: return "custom";
  }
  return "custom";
}

Provenance parse_provenance(std::string_view name) {
  if (name == "general") return Provenance::General;
  if (name == "one-point") return Provenance::OnePoint;
  if (name == "two-point") return Provenance::TwoPoint;
  if (name == "custom") return Provenance::Custom;
  throw ParseError("unknown provenance '" + std::string(name) + "'");
}

Surface make_surface(MultiPoly F) {
  require(F.arity() == 4, "F is quaternary", "got arity " + std::to_string(F.arity()));
  require(!F.is_zero(), "F != 0", "the zero polynomial defines no surface");
  require(F.is_homogeneous(), "F homogeneous", "terms of mixed total degree");
  Surface s;
  s.order = F.total_degree();
  s.F = std::move(F);
  return s;
}

Surface surface_from_affine(const MultiPoly& affine) {
  require(affine.arity() == 3, "affine polynomial in x, y, z", "got arity " + std::to_string(affine.arity()));
  return make_surface(homogenize(affine, affine.total_degree()));
}

MultiPoly lift_with_x0(const MultiPoly& form, int j) {
  MultiPoly out(form.arity() + 1);
  for (const auto& [e, c] : form.terms()) {
    Exponents h{};
    h[0] = static_cast<std::uint16_t>(j);
    for (int i = 0; i < form.arity(); ++i) h[i + 1] = e[i];
    out.add_term(h, c);
  }
  return out;
}

MultiPoly binary_to_ternary(const MultiPoly& form) {
  if (form.arity() != 2) throw ArityError("binary_to_ternary: expected arity 2");
  MultiPoly out(3);
  for (const auto& [e, c] : form.terms()) out.add_term(Exponents{e[0], e[1], 0, 0}, c);
  return out;
}

Surface general_q_spherical(int n, int q, const HomogeneousForm& g_lead,
                            std::span<const HomogeneousForm> g_middle,
                            std::span<const HomogeneousForm> f_tail) {
  require(q >= 1, "q >= 1", "got q = " + std::to_string(q));
  require(n >= 2 * q, "n >= 2q", "n = " + std::to_string(n) + ", q = " + std::to_string(q));
  require(static_cast<int>(g_middle.size()) == q - 1, "g_{n-2q+j} given for j = 1..q-1",
          "expected " + std::to_string(q - 1) + " forms, got " + std::to_string(g_middle.size()));
  require(static_cast<int>(f_tail.size()) == n - q + 1, "f_{n-j} given for j = q..n",
          "expected " + std::to_string(n - q + 1) + " forms, got " + std::to_string(f_tail.size()));

  require_ternary(g_lead, n - 2 * q, "g_{n-2q}");
  require(!g_lead.is_zero(), "g_{n-2q} != 0", "leading form vanishes");
  require(a2_multiplicity(g_lead) == 0, "A2 does not divide g_{n-2q}", "leading form is divisible by A2");
  for (int j = 1; j < q; ++j) {
    require_ternary(g_middle[static_cast<std::size_t>(j - 1)], n - 2 * q + j,
                    "g_{n-2q+" + std::to_string(j) + "}");
  }
  for (int j = q; j <= n; ++j) {
    require_ternary(f_tail[static_cast<std::size_t>(j - q)], n - j, "f_{" + std::to_string(n - j) + "}");
  }
  // A zero f_{n-q} is accepted: A2 not dividing g_{n-2q} already pins the
  // multiplicity at q (the unit sphere has f_1 = 0).
  const HomogeneousForm& f_critical = f_tail.front();
  require(f_critical.is_zero() || a2_multiplicity(f_critical) == 0, "A2 does not divide f_{n-q}",
          "the x0^q coefficient is divisible by A2");

  const MultiPoly a2 = absolute_quadric(3);
  MultiPoly F = lift_with_x0(pow(a2, q) * g_lead.poly(), 0);
  for (int j = 1; j < q; ++j) {
    F += lift_with_x0(pow(a2, q - j) * g_middle[static_cast<std::size_t>(j - 1)].poly(), j);
  }
  for (int j = q; j <= n; ++j) F += lift_with_x0(f_tail[static_cast<std::size_t>(j - q)].poly(), j);

  Surface s;
  s.F = std::move(F);
  s.order = n;
  s.claimed_q = q;
  s.provenance = Provenance::General;
  return s;
}

Surface one_point_surface(int n, const HomogeneousForm& f_n) {
  require(n >= 1, "n >= 1", "got n = " + std::to_string(n));
  require_ternary(f_n, n, "f_n");
  require(!f_n.is_zero(), "f_n != 0", "tangent cone form vanishes");
  require(a2_multiplicity(f_n) == 0, "A2 does not divide f_n",
          "the surface would split off the isotropic cone");
  const MultiPoly affine = pow(absolute_quadric(3), n) + f_n.poly();
  Surface s;
  s.F = homogenize(affine, 2 * n);
  s.order = 2 * n;
  s.claimed_q = n;
  s.provenance = Provenance::OnePoint;
  return s;
}

HomogeneousForm harmonic_sin(int n) {
  require(n >= 1, "n >= 1", "got n = " + std::to_string(n));
  // Im (x + iy)^n = sum over odd k of C(n,k) (-1)^((k-1)/2) x^(n-k) y^k.
  MultiPoly out(2);
  for (int k = 1; k <= n; k += 2) {
    const Rational sign = ((k - 1) / 2) % 2 == 0 ? 1 : -1;
    out.add_term(Exponents{static_cast<std::uint16_t>(n - k), static_cast<std::uint16_t>(k), 0, 0},
                 sign * binomial(n, k));
  }
  return HomogeneousForm(std::move(out), n);
}

namespace {

UniPoly<Rational> chebyshev(int n, const Rational& first_slope) {
  if (n < 0) throw std::invalid_argument("chebyshev: negative index");
  const UniPoly<Rational> t = UniPoly<Rational>::monomial(1, 1);
  const UniPoly<Rational> two_t = UniPoly<Rational>::monomial(1, 2);
  UniPoly<Rational> prev = UniPoly<Rational>::constant(1);
  if (n == 0) return prev;
  UniPoly<Rational> cur = UniPoly<Rational>::monomial(1, first_slope);
  for (int k = 1; k < n; ++k) {
    UniPoly<Rational> next = two_t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

UniPoly<Rational> chebyshev_first(int n) { return chebyshev(n, 1); }
UniPoly<Rational> chebyshev_second(int n) { return chebyshev(n, 2); }

HomogeneousForm g_form(int n) {
  require(n >= 2, "n >= 2", "got n = " + std::to_string(n));
  const bool odd = n % 2 == 1;
  const UniPoly<Rational> cheb = odd ? chebyshev_first(n) : chebyshev_second(n - 1);
  const int rho_degree = odd ? n : n - 1;
  const int sign_exponent = odd ? (n - 1) / 2 : n / 2 - 1;

  // rho^D * c_k (y / rho)^k = c_k y^k (x^2 + y^2)^((D - k) / 2)
  const MultiPoly y = MultiPoly::variable(2, 1);
  const MultiPoly rho_sq = sum_of_squares(2);
  MultiPoly out(2);
  for (int k = 0; k <= cheb.degree(); ++k) {
    const Rational& c = cheb.coeffs()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if ((rho_degree - k) % 2 != 0) {
      throw std::logic_error("g_form(" + std::to_string(n) + "): odd power of rho survives at t^" +
                             std::to_string(k));
    }
    out += c * pow(y, k) * pow(rho_sq, (rho_degree - k) / 2);
  }
  if (!odd) out *= MultiPoly::variable(2, 0);
  if (sign_exponent % 2 != 0) out = -out;

  HomogeneousForm result(std::move(out), n);
  if (!(result == harmonic_sin(n))) {
    throw std::logic_error("g_form(" + std::to_string(n) + ") disagrees with Im (x + iy)^n");
  }
  return result;
}

void TwoPointParams::validate() const {
  require(n >= 2, "n >= 2", "got n = " + std::to_string(n));
  require(p > 0, "p > 0", "got p = " + p.get_str());
}

Surface two_point_surface(const TwoPointParams& params) {
  params.validate();
  const int n = params.n;
  const MultiPoly a2 = absolute_quadric(3);
  const MultiPoly minus_pz = MultiPoly::monomial(3, Exponents{0, 0, 1, 0}, -params.p);

  MultiPoly affine = pow(a2, n);
  for (int j = 1; j < n; ++j) affine += binomial(n, j) * pow(minus_pz, j) * pow(a2, n - j);
  affine -= binary_to_ternary(g_form(n).poly());
  affine += pow(minus_pz, n);

  Surface s;
  s.F = homogenize(affine, 2 * n);
  s.order = 2 * n;
  s.claimed_q = n;
  s.provenance = Provenance::TwoPoint;
  s.p = params.p;
  return s;
}

HomogeneousForm tangent_cone_two_point(const TwoPointParams& params) {
  params.validate();
  const MultiPoly minus_pz = MultiPoly::monomial(3, Exponents{0, 0, 1, 0}, -params.p);
  return HomogeneousForm(binary_to_ternary(g_form(params.n).poly()) - pow(minus_pz, params.n), params.n);
}

HomogeneousForm equiangular_f(int n) {
  require(n >= 2, "n >= 2", "got n = " + std::to_string(n));
  const bool odd = n % 2 == 1;
  const Rational sign = odd ? ((n - 1) / 2 % 2 == 0 ? 1 : -1) : -1;
  const MultiPoly exact = harmonic_sin(n).poly() * (sign * power_of_two(1 - n));

  const double step = (odd ? 2.0 : 1.0) * std::numbers::pi / n;
  std::mt19937_64 rng(0x5eed0000u + static_cast<unsigned>(n));
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int sample = 0; sample < 10; ++sample) {
    const double a = angle(rng);
    const double x = std::cos(a);
    const double y = std::sin(a);
    double product = 1.0;
    for (int i = 0; i < n; ++i) product *= std::cos(i * step) * y - std::sin(i * step) * x;
    const double closed = eval<double>(exact, {x, y});
    if (std::abs(product - closed) > 1e-12) {
      throw std::logic_error("equiangular_f(" + std::to_string(n) + "): closed form deviates from the line product");
    }
  }
  return HomogeneousForm(exact, n);
}

CSOrderReport cs_order_report(int m, int z_axis, int a_pairs, int p1_fold, int p2_fold) {
  require(m >= 0 && z_axis >= 0 && a_pairs >= 0 && p1_fold >= 0 && p2_fold >= 0, "inputs nonnegative",
          "all of m, z', a', p1', p2' must be >= 0");
  CSOrderReport r{m, z_axis, a_pairs, p1_fold, p2_fold, 0, 0, 0, 0};
  r.surface_order = 3 * m - (z_axis + 2 * a_pairs + 2 * p1_fold + 2 * p2_fold);
  r.absolute_mult = m - (z_axis + p1_fold + p2_fold);
  r.axis_mult = m - 2 * a_pairs + z_axis;
  r.point_mult = 2 * m - (2 * a_pairs + p1_fold + p2_fold);
  require(r.surface_order >= 0 && r.absolute_mult >= 0 && r.axis_mult >= 0 && r.point_mult >= 0,
          "formulas nonnegative", "inconsistent curve data gives a negative order or multiplicity");
  return r;
}

}  // namespace qsphere
