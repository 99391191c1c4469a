#include "qsphere/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qsphere {
namespace {

// Horner evaluation of p and p' at z; coeffs ascending.
std::pair<Complex, Complex> horner(std::span<const Complex> c, Complex z) {
  Complex p = c.back();
  Complex dp = 0.0;
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[k];
  }
  return {p, dp};
}

int sign_at_infinity(const UniPoly<Rational>& p, bool positive) {
  const int s = sgn(p.leading());
  return (positive || p.degree() % 2 == 0) ? s : -s;
}

}  // namespace

std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs) {
  std::size_t size = coeffs.size();
  while (size > 0 && coeffs[size - 1] == Complex(0.0)) --size;
  if (size <= 1) return {};
  const std::size_t degree = size - 1;

  std::vector<Complex> c(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(size));
  const Complex lead = c.back();
  for (auto& v : c) v /= lead;

  if (degree == 1) return {-c[0]};

  // Cauchy bound on root moduli for the starting circle.
  double bound = 0.0;
  for (std::size_t k = 0; k < degree; ++k) bound = std::max(bound, std::abs(c[k]));
  const double radius = std::min(1.0 + bound, 1e6) * 0.5 + 0.1;

  std::vector<Complex> z(degree);
  for (std::size_t k = 0; k < degree; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(degree) + 0.4;
    z[k] = std::polar(radius, angle);
  }

  for (int iter = 0; iter < 800; ++iter) {
    double largest_step = 0.0;
    for (std::size_t k = 0; k < degree; ++k) {
      const auto [p, dp] = horner(c, z[k]);
      if (p == Complex(0.0)) continue;
      const Complex ratio = dp == Complex(0.0) ? Complex(1e-3) : p / dp;
      Complex repulsion = 0.0;
      for (std::size_t j = 0; j < degree; ++j) {
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      }
      const Complex step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[k] -= step;
      largest_step = std::max(largest_step, std::abs(step) / (1.0 + std::abs(z[k])));
    }
    if (largest_step < 1e-16) break;
  }

  for (auto& root : z) {
    for (int k = 0; k < 3; ++k) {
      const auto [p, dp] = horner(c, root);
      if (dp == Complex(0.0)) break;
      const Complex next = root - p / dp;
      if (std::abs(horner(c, next).first) >= std::abs(p)) break;
      root = next;
    }
  }
  return z;
}

std::vector<RootCluster> cluster_roots(std::span<const Complex> roots, double rel_tol) {
  std::vector<RootCluster> out;
  for (const Complex& r : roots) {
    auto it = std::find_if(out.begin(), out.end(), [&](const RootCluster& c) {
      return std::abs(c.value - r) <= rel_tol * std::max(1.0, std::abs(r));
    });
    if (it == out.end()) {
      out.push_back({r, 1});
    } else {
      it->value = (it->value * static_cast<double>(it->multiplicity) + r) /
                  static_cast<double>(it->multiplicity + 1);
      ++it->multiplicity;
    }
  }
  return out;
}

std::vector<Complex> to_complex(const UniPoly<Rational>& p) {
  std::vector<Complex> out;
  for (const auto& c : p.coeffs()) out.emplace_back(c.get_d(), 0.0);
  return out;
}

std::vector<Complex> to_complex(const UniPoly<GaussRational>& p) {
  std::vector<Complex> out;
  for (const auto& c : p.coeffs()) out.push_back(c.to_complex());
  return out;
}

int count_distinct_real_roots(const UniPoly<Rational>& f) {
  if (f.degree() < 1) return 0;
  std::vector<UniPoly<Rational>> chain{f, f.derivative()};
  while (!chain.back().is_zero()) {
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    auto r = divmod(a, b).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  const auto changes = [&](bool positive) {
    int count = 0;
    int last = 0;
    for (const auto& p : chain) {
      const int s = sign_at_infinity(p, positive);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  return changes(false) - changes(true);
}

}  // namespace qsphere
