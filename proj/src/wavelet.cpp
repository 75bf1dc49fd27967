#include "lvf/wavelet.hpp"

#include <cmath>

#include "lvf/errors.hpp"
#include "scanner.hpp"

namespace lvf {

using detail::Scanner;

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t n) {
  std::int64_t q = a / n;
  if ((a % n != 0) && ((a < 0) != (n < 0))) --q;
  return q;
}

} // namespace

LaurentPoly LaurentPoly::monomial(std::int64_t k, const GScalar& c) {
  LaurentPoly p;
  p.add_term(k, c);
  return p;
}

GScalar LaurentPoly::coefficient(std::int64_t k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? GScalar() : it->second;
}

void LaurentPoly::add_term(std::int64_t k, const GScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly LaurentPoly::circle_conj() const {
  LaurentPoly out;
  for (const auto& [k, c] : terms_) out.add_term(-k, c.conj());
  return out;
}

LaurentPoly LaurentPoly::compose_power(std::int64_t n) const {
  LaurentPoly out;
  for (const auto& [k, c] : terms_) out.add_term(k * n, c);
  return out;
}

Rational LaurentPoly::norm2() const {
  Rational s;
  for (const auto& [k, c] : terms_) s += c.abs2();
  return s;
}

std::complex<double> LaurentPoly::evaluate(std::complex<double> z) const {
  std::complex<double> s;
  for (const auto& [k, c] : terms_) s += c.to_complex() * std::pow(z, static_cast<double>(k));
  return s;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const GScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += "(" + c.to_string() + ")";
      continue;
    }
    if (!c.is_one()) out += "(" + c.to_string() + ") ";
    out += "z^{" + std::to_string(k) + "}";
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  Scanner sc(text);
  if (sc.done()) throw ParseError("empty Laurent polynomial");
  LaurentPoly out;
  bool first = true;
  while (!sc.done()) {
    GScalar c(1);
    if (sc.accept('-')) {
      c = GScalar(-1);
    } else if (!first) {
      sc.expect('+');
    }
    first = false;
    bool any = false;
    if (sc.accept('(')) {
      c *= GScalar::parse(sc.until(')'));
      any = true;
    } else if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      c *= GScalar(Rational::parse(sc.number_literal()));
      any = true;
    }
    std::int64_t k = 0;
    if (sc.accept('z')) {
      k = 1;
      if (sc.accept('^')) {
        if (sc.accept('{')) {
          k = sc.integer();
          sc.expect('}');
        } else {
          k = sc.integer();
        }
      }
      any = true;
    }
    if (!any) sc.fail("expected a term");
    out.add_term(k, c);
  }
  return out;
}

LaurentPoly branch_average(const LaurentPoly& p, std::int64_t n) {
  LaurentPoly out;
  for (const auto& [k, c] : p.terms())
    if (k % n == 0) out.add_term(k / n, c);
  return out;
}

GScalar haar_mean(const LaurentPoly& f) { return f.coefficient(0); }

LaurentPoly branch_mean(const LaurentPoly& f, std::int64_t n) {
  // omega = z zeta^l: the branch average keeps exactly the exponents divisible by n.
  LaurentPoly out;
  for (const auto& [k, c] : f.terms())
    if (floor_div(k, n) * n == k) out.add_term(k, c);
  return out;
}

QMFSystem standard_qmf(std::int64_t n) {
  if (n < 2) throw InvalidArgument("branching factor must be at least 2");
  QMFSystem sys{n, {}};
  for (std::int64_t j = 0; j < n; ++j) sys.filters.push_back(LaurentPoly::monomial(j));
  return sys;
}

std::vector<CheckResult> verify_qmf(const QMFSystem& sys) {
  const auto n = static_cast<std::size_t>(sys.n);
  if (sys.filters.size() != n) throw DimensionMismatch("QMF basis needs exactly n filters");
  std::optional<std::string> qmf_witness, ortho_witness;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const LaurentPoly avg =
          branch_average(sys.filters[i] * sys.filters[j].circle_conj(), sys.n);
      const LaurentPoly expected = i == j ? LaurentPoly::monomial(0) : LaurentPoly();
      if (avg == expected) continue;
      const std::string w = "(" + std::to_string(i) + ", " + std::to_string(j) + "): " + avg.to_string();
      if (i == j && !qmf_witness) qmf_witness = w;
      if (!ortho_witness) ortho_witness = w;
    }
  }
  const std::string label = "n=" + std::to_string(sys.n);
  CheckResult qmf = make_check("qmf_condition " + label, !qmf_witness);
  qmf.witness = qmf_witness;
  CheckResult ortho = make_check("qmf_orthogonality " + label, !ortho_witness);
  ortho.witness = ortho_witness;
  return {qmf, ortho};
}

LaurentPoly S(std::size_t i, const LaurentPoly& f, const QMFSystem& sys) {
  return sys.filters.at(i) * f.compose_power(sys.n);
}

LaurentPoly S_star(std::size_t i, const LaurentPoly& f, const QMFSystem& sys) {
  return branch_average(sys.filters.at(i).circle_conj() * f, sys.n);
}

LaurentPoly wavelet_D(const ExactMatrix& pairing, const QMFSystem& sys, const LaurentPoly& f) {
  const auto n = static_cast<std::size_t>(sys.n);
  if (pairing.rows() != n || pairing.cols() != n || sys.filters.size() != n) {
    throw DimensionMismatch("pairing size must equal the branching factor");
  }
  LaurentPoly out;
  for (std::size_t j = 0; j < n; ++j) {
    const LaurentPoly inner = branch_mean(sys.filters[j].circle_conj() * f, sys.n);
    for (std::size_t i = 0; i < n; ++i) {
      if (pairing(i, j).is_zero()) continue;
      out += pairing(i, j) * (sys.filters[i] * inner);
    }
  }
  return out;
}

LaurentPoly wavelet_D_composed(const ExactMatrix& pairing, const QMFSystem& sys,
                               const LaurentPoly& f) {
  const auto n = static_cast<std::size_t>(sys.n);
  if (pairing.rows() != n || pairing.cols() != n) {
    throw DimensionMismatch("pairing size must equal the branching factor");
  }
  LaurentPoly out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!pairing(i, j).is_zero()) out += pairing(i, j) * S(i, S_star(j, f, sys), sys);
  return out;
}

LaurentPoly apply_cuntz(const CuntzElement& e, const LaurentPoly& f, const QMFSystem& sys) {
  LaurentPoly out;
  for (const auto& [w, c] : e.terms()) {
    LaurentPoly g = f;
    // s_nu^* = s*[nu_k] ... s*[nu_1] acts with s*[nu_1] first.
    for (auto j : w.right) g = S_star(static_cast<std::size_t>(j), g, sys);
    for (auto it = w.left.rbegin(); it != w.left.rend(); ++it)
      g = S(static_cast<std::size_t>(*it), g, sys);
    out += c * g;
  }
  return out;
}

LaurentPoly apply_sequence(const std::vector<SignedGenerator>& seq, const LaurentPoly& f,
                           const QMFSystem& sys) {
  LaurentPoly g = f;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    const auto j = static_cast<std::size_t>(it->index);
    g = it->star ? S_star(j, g, sys) : S(j, g, sys);
  }
  return g;
}

} // namespace lvf
