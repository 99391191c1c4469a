#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qsphere/univariate.hpp"

namespace qsphere {

using Complex = std::complex<double>;

/// All complex roots of sum_k coeffs[k] t^k (ascending order) by the
/// Aberth-Ehrlich iteration with a final Newton polish. Exact leading zeros
/// are ignored. Accuracy degrades for multiple roots; callers with exact
/// input should go through exact_roots instead.
std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs);

struct RootCluster {
  Complex value;
  int multiplicity = 1;
};

/// Groups roots closer than rel_tol * max(1, |root|) into one multiple root.
std::vector<RootCluster> cluster_roots(std::span<const Complex> roots, double rel_tol = 1e-7);

std::vector<Complex> to_complex(const UniPoly<Rational>& p);
std::vector<Complex> to_complex(const UniPoly<GaussRational>& p);

/// Roots with multiplicities. Multiplicities come from an exact square-free
/// decomposition, so each numeric solve only sees simple roots.
template <class Field>
std::vector<RootCluster> exact_roots(const UniPoly<Field>& f, double rel_tol = 1e-7) {
  std::vector<Complex> all;
  std::vector<int> mult;
  for (const auto& [factor, m] : square_free_factors(f)) {
    const auto coeffs = to_complex(factor);
    for (const Complex& r : polynomial_roots(coeffs)) {
      all.push_back(r);
      mult.push_back(m);
    }
  }
  // Factors are coprime, so clustering only guards against numerical
  // near-coincidence; keep the multiplicities we already know.
  std::vector<RootCluster> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool merged = false;
    for (auto& c : out) {
      if (std::abs(c.value - all[i]) <= rel_tol * std::max(1.0, std::abs(all[i]))) {
        c.multiplicity += mult[i];
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back({all[i], mult[i]});
  }
  return out;
}

/// Number of distinct real roots, by an exact Sturm sequence.
int count_distinct_real_roots(const UniPoly<Rational>& f);

}  // namespace qsphere
