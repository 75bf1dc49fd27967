#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <string_view>

#include "lvf/rational.hpp"

namespace lvf {

/// Gaussian rational re + im*i. Every coefficient in the library is one of these.
class GScalar {
public:
  GScalar() = default;
  GScalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GScalar(std::int64_t re) : re_(re) {}         // NOLINT(google-explicit-constructor)
  GScalar(int re) : re_(re) {}                  // NOLINT(google-explicit-constructor)
  GScalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GScalar i() { return {Rational(0), Rational(1)}; }

  /// Accepts "a", "bi", "a+bi", "a-bi", "i", "-i" with rational literals a, b.
  static GScalar parse(std::string_view text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  bool is_one() const { return im_.is_zero() && re_ == Rational(1); }

  GScalar conj() const { return {re_, -im_}; }
  Rational abs2() const { return re_ * re_ + im_ * im_; }
  /// Throws DivisionByZero for zero.
  GScalar inverse() const;
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

  GScalar operator-() const { return {-re_, -im_}; }
  GScalar& operator+=(const GScalar& o);
  GScalar& operator-=(const GScalar& o);
  GScalar& operator*=(const GScalar& o);
  GScalar& operator/=(const GScalar& o);

  friend GScalar operator+(GScalar a, const GScalar& b) { return a += b; }
  friend GScalar operator-(GScalar a, const GScalar& b) { return a -= b; }
  friend GScalar operator*(GScalar a, const GScalar& b) { return a *= b; }
  friend GScalar operator/(GScalar a, const GScalar& b) { return a /= b; }
  friend bool operator==(const GScalar& a, const GScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string to_string() const;

private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GScalar& z);

} // namespace lvf
