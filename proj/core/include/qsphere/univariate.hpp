#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qsphere/rational.hpp"

namespace qsphere {

/// Dense univariate polynomial over an exact field (Rational or
/// GaussRational). Coefficients are stored in ascending order with no
/// trailing zeros; the zero polynomial has degree -1.
template <class Field>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Field> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly monomial(int k, const Field& coeff) {
    std::vector<Field> c(static_cast<std::size_t>(k) + 1, Field(0));
    c.back() = coeff;
    return UniPoly(std::move(c));
  }
  static UniPoly constant(const Field& value) { return UniPoly(std::vector<Field>{value}); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Field>& coeffs() const noexcept { return c_; }
  Field coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(k)] : Field(0);
  }
  const Field& leading() const { return c_.back(); }

  /// Number of vanishing low-order coefficients, i.e. the multiplicity of
  /// the root 0. Zero polynomial reports 0.
  int zero_root_multiplicity() const {
    int k = 0;
    while (k < degree() && c_[static_cast<std::size_t>(k)] == Field(0)) ++k;
    return is_zero() ? 0 : k;
  }

  /// Drops the factor t^k.
  UniPoly shift_down(int k) const {
    if (k > degree()) return UniPoly();
    return UniPoly(std::vector<Field>(c_.begin() + k, c_.end()));
  }

  UniPoly derivative() const {
    std::vector<Field> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Field(static_cast<int>(k)));
    return UniPoly(std::move(d));
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    const Field lead = leading();
    std::vector<Field> out;
    out.reserve(c_.size());
    for (const auto& v : c_) out.push_back(v / lead);
    return UniPoly(std::move(out));
  }

  Field eval(const Field& t) const {
    Field acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Field> out(std::max(a.c_.size(), b.c_.size()), Field(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) out[k] = out[k] + a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) out[k] = out[k] + b.c_[k];
    return UniPoly(std::move(out));
  }
  friend UniPoly operator-(const UniPoly& a) {
    std::vector<Field> out;
    for (const auto& v : a.c_) out.push_back(Field(0) - v);
    return UniPoly(std::move(out));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Field> out(a.c_.size() + b.c_.size() - 1, Field(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(out));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Field(0)) c_.pop_back();
  }

  std::vector<Field> c_;
};

/// Euclidean division a = q*b + r with deg r < deg b.
template <class Field>
std::pair<UniPoly<Field>, UniPoly<Field>> divmod(const UniPoly<Field>& a, const UniPoly<Field>& b) {
  if (b.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
  std::vector<Field> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly<Field>(), a};
  std::vector<Field> quot(static_cast<std::size_t>(a.degree() - db) + 1, Field(0));
  for (int k = a.degree(); k >= db; --k) {
    const Field factor = rem[static_cast<std::size_t>(k)] / b.leading();
    quot[static_cast<std::size_t>(k - db)] = factor;
    if (factor == Field(0)) continue;
    for (int i = 0; i <= db; ++i) {
      auto& slot = rem[static_cast<std::size_t>(k - db + i)];
      slot = slot - factor * b.coeffs()[static_cast<std::size_t>(i)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly<Field>(std::move(quot)), UniPoly<Field>(std::move(rem))};
}

/// Monic greatest common divisor.
template <class Field>
UniPoly<Field> gcd(UniPoly<Field> a, UniPoly<Field> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Yun's square-free factorization: f = lc * prod_i a_i^i with each a_i
/// monic and square-free. Only non-constant factors are returned.
template <class Field>
std::vector<std::pair<UniPoly<Field>, int>> square_free_factors(const UniPoly<Field>& f) {
  std::vector<std::pair<UniPoly<Field>, int>> out;
  if (f.degree() < 1) return out;
  const UniPoly<Field> df = f.derivative();
  const UniPoly<Field> a0 = gcd(f, df);
  UniPoly<Field> b = divmod(f, a0).first;
  UniPoly<Field> c = divmod(df, a0).first;
  UniPoly<Field> d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    const UniPoly<Field> a = gcd(b, d);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
    if (a.degree() > 0) out.emplace_back(a, i);
  }
  return out;
}

}  // namespace qsphere
