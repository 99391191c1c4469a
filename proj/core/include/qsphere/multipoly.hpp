#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qsphere/errors.hpp"
#include "qsphere/rational.hpp"

namespace qsphere {

inline constexpr int kMaxArity = 4;

/// Exponent tuple. Slots at or beyond the polynomial's arity are always zero,
/// so the std::array ordering is the lexicographic order x0 > x1 > x2 > x3.
using Exponents = std::array<std::uint16_t, kMaxArity>;

/// Sentinel multiplicity for the zero polynomial, which every power of A2
/// divides.
inline constexpr int kInfiniteMultiplicity = std::numeric_limits<int>::max();

/// Sparse polynomial with exact rational coefficients in 2, 3 or 4 variables.
///
/// Arity 4 is the homogeneous chart (x0, x1, x2, x3); arity 3 is either the
/// affine space (x, y, z) or homogeneous plane coordinates (x0, x1, x2);
/// arity 2 is the affine plane (x, y). Zero coefficients are never stored.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  /// Zero polynomial in three variables.
  MultiPoly() : MultiPoly(3) {}
  explicit MultiPoly(int arity);

  static MultiPoly constant(int arity, const Rational& value);
  static MultiPoly variable(int arity, int index);
  static MultiPoly monomial(int arity, const Exponents& exps, const Rational& coeff);

  int arity() const noexcept { return arity_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }

  /// Coefficient of the given monomial (zero when absent).
  Rational coefficient(const Exponents& exps) const;

  /// Adds `coeff` to the monomial's coefficient, dropping it if it cancels.
  void add_term(const Exponents& exps, const Rational& coeff);

  /// -1 for the zero polynomial.
  int total_degree() const;
  /// Lowest total degree of any term; -1 for the zero polynomial.
  int min_total_degree() const;
  int degree_in(int var) const;
  bool is_homogeneous() const;
  bool is_constant() const;
  /// Sum of the terms of total degree exactly `d`.
  MultiPoly homogeneous_part(int d) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& scalar);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  void check_same_arity(const MultiPoly& other, const char* op) const;

  int arity_;
  TermMap terms_;
};

MultiPoly add(const MultiPoly& a, const MultiPoly& b);
MultiPoly mul(const MultiPoly& a, const MultiPoly& b);
/// Throws std::invalid_argument for k < 0.
MultiPoly pow(const MultiPoly& a, int k);
/// Formal partial derivative; throws std::out_of_range for var >= arity.
MultiPoly partial(const MultiPoly& a, int var);

/// Mixed partial derivative of the given per-variable orders.
MultiPoly partial(const MultiPoly& a, const Exponents& orders);

/// Substitutes `substitutions[i]` for variable i. All substitutions share one
/// arity, which becomes the arity of the result.
MultiPoly compose(const MultiPoly& f, std::span<const MultiPoly> substitutions);

/// x^2 + y^2 (+ z^2) over all variables of the given arity.
MultiPoly sum_of_squares(int arity);
/// x1^2 + x2^2 + x3^2 for arity 4, x^2 + y^2 + z^2 for arity 3.
MultiPoly absolute_quadric(int arity);

/// Quotient of f by g if the lexicographic division leaves no remainder.
/// Throws std::invalid_argument when g is zero.
std::optional<MultiPoly> divide_exact(const MultiPoly& f, const MultiPoly& g);

/// Adds a leading homogenizing variable x0: arity k becomes k + 1.
/// Throws PreconditionError if deg f > n.
MultiPoly homogenize(const MultiPoly& f, int n);
/// Sets x0 := 1 and drops it: arity k becomes k - 1.
MultiPoly dehomogenize(const MultiPoly& f);

/// Multiplies by the positive rational that makes all coefficients coprime
/// integers. Signs are kept; zero stays zero.
MultiPoly primitive_part(const MultiPoly& f);
/// True if a = c * b for some nonzero rational c (both zero counts as true).
bool proportional(const MultiPoly& a, const MultiPoly& b);

// --- Evaluation ----------------------------------------------------------

namespace detail {
template <class T>
T coefficient_as(const Rational& c);
template <>
inline Rational coefficient_as<Rational>(const Rational& c) { return c; }
template <>
inline double coefficient_as<double>(const Rational& c) { return c.get_d(); }
template <>
inline long double coefficient_as<long double>(const Rational& c) {
  return static_cast<long double>(c.get_d());
}
template <>
inline std::complex<double> coefficient_as<std::complex<double>>(const Rational& c) {
  return {c.get_d(), 0.0};
}
template <>
inline GaussRational coefficient_as<GaussRational>(const Rational& c) { return GaussRational(c); }
}  // namespace detail

/// Evaluates at a point whose length equals the arity. Exact when T is
/// Rational or GaussRational.
template <class T>
T eval(const MultiPoly& f, std::span<const T> point) {
  if (static_cast<int>(point.size()) != f.arity()) {
    throw ArityError("eval: point has " + std::to_string(point.size()) +
                     " coordinates, polynomial has arity " + std::to_string(f.arity()));
  }
  std::array<std::vector<T>, kMaxArity> powers;
  for (int v = 0; v < f.arity(); ++v) {
    const int top = f.degree_in(v);
    powers[v].reserve(static_cast<std::size_t>(top) + 1);
    powers[v].push_back(T(1));
    for (int e = 1; e <= top; ++e) powers[v].push_back(powers[v].back() * point[v]);
  }
  T acc(0);
  for (const auto& [exps, coeff] : f.terms()) {
    T term = detail::coefficient_as<T>(coeff);
    for (int v = 0; v < f.arity(); ++v) {
      if (exps[v] != 0) term = term * powers[v][exps[v]];
    }
    acc = acc + term;
  }
  return acc;
}

template <class T>
T eval(const MultiPoly& f, std::initializer_list<T> point) {
  return eval<T>(f, std::span<const T>(point.begin(), point.size()));
}

// --- Homogeneous forms and the x0-decomposition ---------------------------

/// A polynomial whose terms all have total degree `degree` (or zero).
class HomogeneousForm {
 public:
  HomogeneousForm() = default;
  /// Throws PreconditionError if some term has the wrong total degree.
  HomogeneousForm(MultiPoly poly, int degree);
  /// Degree taken from the polynomial itself (0 for the zero form); throws if
  /// the polynomial is not homogeneous.
  explicit HomogeneousForm(MultiPoly poly);

  const MultiPoly& poly() const noexcept { return poly_; }
  int degree() const noexcept { return degree_; }
  int arity() const noexcept { return poly_.arity(); }
  bool is_zero() const noexcept { return poly_.is_zero(); }

  friend bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) {
    return a.degree_ == b.degree_ && a.poly_ == b.poly_;
  }

 private:
  MultiPoly poly_;
  int degree_ = 0;
};

/// F = sum_j x0^j * f_{n-j}. `parts[j]` holds f_{n-j} in the remaining
/// variables.
struct X0Decomposition {
  int order = 0;
  std::vector<HomogeneousForm> parts;

  const HomogeneousForm& f(int degree) const { return parts.at(static_cast<std::size_t>(order - degree)); }
};

/// Splits a homogeneous polynomial of degree n by powers of its first
/// variable. Throws PreconditionError if F is not homogeneous of degree n.
X0Decomposition decompose_by_x0(const MultiPoly& f, int n);
MultiPoly reassemble(const X0Decomposition& decomposition);

/// Largest m such that (sum of squares)^m divides f exactly, where the sum
/// runs over all variables of f. kInfiniteMultiplicity for the zero form.
int a2_multiplicity(const MultiPoly& f);
inline int a2_multiplicity(const HomogeneousForm& f) { return a2_multiplicity(f.poly()); }

/// Multiplicity of the isotropic locus x0 = 0, sum x_i^2 = 0 on the
/// hypersurface F = 0, read off the x0-decomposition: the largest q with
/// A2^(q-j) | f_{n-j} for every j < q.
int isotropic_multiplicity(const MultiPoly& homogeneous_f);

}  // namespace qsphere
