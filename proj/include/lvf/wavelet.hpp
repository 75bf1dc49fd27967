#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lvf/cuntz.hpp"
#include "lvf/gscalar.hpp"
#include "lvf/report.hpp"

namespace lvf {

/// Finite Laurent polynomial sum c_k z^k, read as a function on the unit circle.
class LaurentPoly {
public:
  using TermMap = std::map<std::int64_t, GScalar>;

  LaurentPoly() = default;
  static LaurentPoly monomial(std::int64_t k, const GScalar& c = GScalar(1));
  /// Parses e.g. "z^{-2} + (1/2) z^{3}"; a bare scalar is the z^0 term.
  static LaurentPoly parse(std::string_view text);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GScalar coefficient(std::int64_t k) const;
  void add_term(std::int64_t k, const GScalar& c);

  /// Pointwise conjugate on |z| = 1: c z^k becomes conj(c) z^{-k}.
  LaurentPoly circle_conj() const;
  /// f(z^n).
  LaurentPoly compose_power(std::int64_t n) const;
  /// Sum of |c_k|^2.
  Rational norm2() const;
  std::complex<double> evaluate(std::complex<double> z) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const GScalar& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const GScalar& c, LaurentPoly a) { return a *= c; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string() const;

private:
  TermMap terms_;
};

/// (1/n) sum over omega^n = z of p(omega), as a polynomial in z.
LaurentPoly branch_average(const LaurentPoly& p, std::int64_t n);
/// Haar integral: the z^0 coefficient.
GScalar haar_mean(const LaurentPoly& f);
/// z |-> (1/n) sum over r(omega) = r(z) of f(omega).
LaurentPoly branch_mean(const LaurentPoly& f, std::int64_t n);

struct QMFSystem {
  std::int64_t n = 2;
  std::vector<LaurentPoly> filters;
};

/// m_j = z^j with r(z) = z^n.
QMFSystem standard_qmf(std::int64_t n);
/// Both QMF conditions for every pair (i, j), one check per condition.
std::vector<CheckResult> verify_qmf(const QMFSystem& sys);

/// S_i f = m_i (f o r).
LaurentPoly S(std::size_t i, const LaurentPoly& f, const QMFSystem& sys);
/// S_i^* f (z) = (1/n) sum_{r(omega) = z} conj(m_i)(omega) f(omega).
LaurentPoly S_star(std::size_t i, const LaurentPoly& f, const QMFSystem& sys);

/// Direct branch sum over omega with r(omega) = r(z); `pairing` is n x n.
LaurentPoly wavelet_D(const ExactMatrix& pairing, const QMFSystem& sys, const LaurentPoly& f);
/// sum_ij pairing(i, j) S_i S_j^* f.
LaurentPoly wavelet_D_composed(const ExactMatrix& pairing, const QMFSystem& sys,
                               const LaurentPoly& f);
/// Image of a normal-form Cuntz element under s_j |-> S_j.
LaurentPoly apply_cuntz(const CuntzElement& e, const LaurentPoly& f, const QMFSystem& sys);
/// Applies a raw generator sequence right to left.
LaurentPoly apply_sequence(const std::vector<SignedGenerator>& seq, const LaurentPoly& f,
                           const QMFSystem& sys);

} // namespace lvf
