#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace qsphere {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "7", "-3/4" or a finite decimal such as "2.5" into an exact
/// rational. Throws ParseError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

/// Element of Q(i). Used where exact arithmetic has to follow the isotropic
/// directions, which are never real.
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(int value) : re(value) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational real, Rational imag = 0) : re(std::move(real)), im(std::move(imag)) {}

  GaussRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
    const Rational n = b.norm();
    const GaussRational num = a * b.conj();
    return {num.re / n, num.im / n};
  }
  GaussRational& operator+=(const GaussRational& o) { return *this = *this + o; }
  GaussRational& operator-=(const GaussRational& o) { return *this = *this - o; }
  GaussRational& operator*=(const GaussRational& o) { return *this = *this * o; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

}  // namespace qsphere
