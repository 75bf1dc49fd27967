#include "lvf/gscalar.hpp"

#include <algorithm>

#include "lvf/errors.hpp"

namespace lvf {

GScalar GScalar::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty scalar");
  if (s.back() != 'i') return GScalar(Rational::parse(s));

  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t p = s.size(); p-- > 1;) {
    if (s[p] == '+' || s[p] == '-') {
      split = p;
      break;
    }
  }
  std::string re_text = split == std::string::npos ? std::string() : s.substr(0, split);
  std::string im_text = split == std::string::npos ? s : s.substr(split);
  Rational im;
  if (im_text.empty() || im_text == "+") {
    im = Rational(1);
  } else if (im_text == "-") {
    im = Rational(-1);
  } else {
    im = Rational::parse(im_text);
  }
  Rational re = re_text.empty() ? Rational(0) : Rational::parse(re_text);
  return {re, im};
}

GScalar GScalar::inverse() const {
  const Rational n = abs2();
  if (n.is_zero()) throw DivisionByZero();
  return {re_ / n, -im_ / n};
}

GScalar& GScalar::operator+=(const GScalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GScalar& GScalar::operator-=(const GScalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GScalar& GScalar::operator*=(const GScalar& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GScalar& GScalar::operator/=(const GScalar& o) {
  if (o.im_.is_zero()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GScalar::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string im_text;
  const Rational mag = im_.abs();
  if (mag != Rational(1)) im_text = mag.to_string();
  im_text += "i";
  if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + im_text;
  return re_.to_string() + (im_.sign() < 0 ? "-" : "+") + im_text;
}

std::ostream& operator<<(std::ostream& os, const GScalar& z) { return os << z.to_string(); }

} // namespace lvf
