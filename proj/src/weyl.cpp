#include "lvf/weyl.hpp"

#include <algorithm>
#include <cctype>

#include "lvf/errors.hpp"
#include "scanner.hpp"

namespace lvf {

using detail::Scanner;

std::uint32_t degree(const PowerProduct& p) {
  std::uint32_t total = 0;
  for (const auto& [var, power] : p) total += power;
  return total;
}

PowerProduct merge_powers(const PowerProduct& a, const PowerProduct& b) {
  PowerProduct out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.push_back(*ib++);
    } else {
      out.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return out;
}

namespace {

void append_factors(std::string& out, const PowerProduct& p, char name) {
  for (const auto& [var, power] : p) {
    if (!out.empty()) out += ' ';
    out += name;
    out += '[';
    out += var.to_string();
    out += ']';
    if (power > 1) out += "^" + std::to_string(power);
  }
}

Rational falling_factorial(std::uint32_t n, std::uint32_t k) {
  Rational r(1);
  for (std::uint32_t j = 0; j < k; ++j) r *= Rational(static_cast<std::int64_t>(n - j));
  return r;
}

Rational binomial(std::uint32_t n, std::uint32_t k) {
  Rational r(1);
  for (std::uint32_t j = 0; j < k; ++j) {
    r *= Rational(static_cast<std::int64_t>(n - j));
    r /= Rational(static_cast<std::int64_t>(j + 1));
  }
  return r;
}

struct Partial {
  Rational coef;
  PowerProduct x;
  PowerProduct d;
};

void append_power(PowerProduct& p, HalfIndex var, std::uint32_t power) {
  if (power > 0) p.emplace_back(var, power);
}

/// Normal-orders d^r x^t (a product of commuting per-variable factors) into partial terms.
std::vector<Partial> reorder(const PowerProduct& ds, const PowerProduct& xs) {
  std::vector<Partial> parts{{Rational(1), {}, {}}};
  auto id = ds.begin();
  auto ix = xs.begin();
  while (id != ds.end() || ix != xs.end()) {
    if (ix == xs.end() || (id != ds.end() && id->first < ix->first)) {
      for (auto& p : parts) append_power(p.d, id->first, id->second);
      ++id;
    } else if (id == ds.end() || ix->first < id->first) {
      for (auto& p : parts) append_power(p.x, ix->first, ix->second);
      ++ix;
    } else {
      // d^r x^t = sum_k C(r,k) t!/(t-k)! x^(t-k) d^(r-k)
      const HalfIndex var = id->first;
      const std::uint32_t r = id->second;
      const std::uint32_t t = ix->second;
      std::vector<Partial> next;
      next.reserve(parts.size() * (std::min(r, t) + 1));
      for (const auto& p : parts) {
        for (std::uint32_t k = 0; k <= std::min(r, t); ++k) {
          Partial q = p;
          q.coef *= binomial(r, k) * falling_factorial(t, k);
          append_power(q.x, var, t - k);
          append_power(q.d, var, r - k);
          next.push_back(std::move(q));
        }
      }
      parts = std::move(next);
      ++id;
      ++ix;
    }
  }
  return parts;
}


} // namespace

std::string Monomial::to_string() const {
  std::string out;
  append_factors(out, x, 'x');
  append_factors(out, d, 'd');
  return out.empty() ? "1" : out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da < db;
  if (a.x != b.x) return a.x < b.x;
  return a.d < b.d;
}

bool PowerProductOrder::operator()(const PowerProduct& a, const PowerProduct& b) const {
  const auto da = degree(a);
  const auto db = degree(b);
  if (da != db) return da < db;
  return a < b;
}

WeylElement WeylElement::constant(const GScalar& c) { return monomial({}, c); }

WeylElement WeylElement::x(HalfIndex i) { return monomial({{{i, 1}}, {}}); }

WeylElement WeylElement::d(HalfIndex i) { return monomial({{}, {{i, 1}}}); }

WeylElement WeylElement::monomial(Monomial m, const GScalar& c) {
  WeylElement e;
  e.add_term(m, c);
  return e;
}

GScalar WeylElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GScalar() : it->second;
}

std::uint32_t WeylElement::max_degree() const {
  std::uint32_t out = 0;
  for (const auto& [m, c] : terms_) out = std::max(out, m.total_degree());
  return out;
}

void WeylElement::add_term(const Monomial& m, const GScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

WeylElement WeylElement::operator-() const {
  WeylElement out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

WeylElement& WeylElement::operator*=(const GScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::string WeylElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string factors;
    append_factors(factors, m.x, 'x');
    append_factors(factors, m.d, 'd');
    if (c.is_one() && !factors.empty()) {
      out += factors;
    } else {
      out += "(" + c.to_string() + ")";
      if (!factors.empty()) out += " " + factors;
    }
  }
  return out;
}

WeylElement WeylElement::parse(std::string_view text) {
  Scanner sc(text);
  if (sc.done()) throw ParseError("empty Weyl element");
  WeylElement result;
  bool first = true;
  while (!sc.done()) {
    GScalar sign(1);
    if (!first) {
      if (sc.accept('-')) {
        sign = GScalar(-1);
      } else {
        sc.expect('+');
      }
    } else if (sc.accept('-')) {
      sign = GScalar(-1);
    }
    first = false;

    WeylElement term = constant(sign);
    bool any = false;
    if (sc.accept('(')) {
      term *= GScalar::parse(sc.until(')'));
      any = true;
    } else if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      term *= GScalar(Rational::parse(sc.number_literal()));
      any = true;
    }
    while (sc.peek() == 'x' || sc.peek() == 'd') {
      const char kind = sc.peek();
      sc.accept(kind);
      sc.expect('[');
      const HalfIndex var = HalfIndex::parse(sc.until(']'));
      std::uint32_t power = 1;
      if (sc.accept('^')) power = sc.exponent();
      WeylElement factor = constant(GScalar(1));
      if (power > 0) {
        Monomial m;
        (kind == 'x' ? m.x : m.d).emplace_back(var, power);
        factor = monomial(m);
      }
      term = multiply(term, factor);
      any = true;
    }
    if (!any) sc.fail("expected a term");
    result += term;
  }
  return result;
}

WeylElement multiply(const WeylElement& a, const WeylElement& b, std::uint32_t degree_cap) {
  WeylElement out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const GScalar coef = ca * cb;
      for (auto& part : reorder(ma.d, mb.x)) {
        Monomial m{merge_powers(ma.x, part.x), merge_powers(part.d, mb.d)};
        if (m.total_degree() > degree_cap) {
          throw DegreeCapExceeded("product monomial " + m.to_string() + " exceeds degree cap " +
                                  std::to_string(degree_cap));
        }
        out.add_term(m, coef * GScalar(part.coef));
      }
    }
  }
  return out;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) { return multiply(a, b); }

WeylElement commutator(const WeylElement& a, const WeylElement& b, std::uint32_t degree_cap) {
  return multiply(a, b, degree_cap) - multiply(b, a, degree_cap);
}

WeylElement restrict_to(const WeylElement& e, const IndexWindow& w) {
  auto inside = [&](const PowerProduct& p) {
    return std::all_of(p.begin(), p.end(), [&](const auto& f) { return w.contains(f.first); });
  };
  WeylElement out;
  for (const auto& [m, c] : e.terms()) {
    if (inside(m.x) && inside(m.d)) out.add_term(m, c);
  }
  return out;
}

Polynomial Polynomial::constant(const GScalar& c) { return monomial({}, c); }

Polynomial Polynomial::monomial(PowerProduct p, const GScalar& c) {
  Polynomial out;
  out.add_term(p, c);
  return out;
}

Polynomial Polynomial::from_weyl(const WeylElement& e) {
  Polynomial out;
  for (const auto& [m, c] : e.terms()) {
    if (!m.d.empty()) throw InvalidArgument("polynomial contains derivative factor " + m.to_string());
    out.add_term(m.x, c);
  }
  return out;
}

GScalar Polynomial::coefficient(const PowerProduct& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? GScalar() : it->second;
}

void Polynomial::add_term(const PowerProduct& p, const GScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

Polynomial& Polynomial::operator*=(const GScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

WeylElement Polynomial::to_weyl() const {
  WeylElement out;
  for (const auto& [p, c] : terms_) out.add_term(Monomial{p, {}}, c);
  return out;
}

Polynomial apply_to_polynomial(const WeylElement& w, const Polynomial& p) {
  Polynomial out;
  for (const auto& [m, c] : w.terms()) {
    for (const auto& [powers, pc] : p.terms()) {
      // d^b x^m = prod_i m_i!/(m_i-b_i)! x^(m-b), zero if some b_i > m_i
      Rational factor(1);
      PowerProduct rest;
      auto ip = powers.begin();
      bool vanishes = false;
      for (const auto& [var, r] : m.d) {
        while (ip != powers.end() && ip->first < var) rest.push_back(*ip++);
        if (ip == powers.end() || ip->first != var || ip->second < r) {
          vanishes = true;
          break;
        }
        factor *= falling_factorial(ip->second, r);
        append_power(rest, var, ip->second - r);
        ++ip;
      }
      if (vanishes) continue;
      rest.insert(rest.end(), ip, powers.end());
      out.add_term(merge_powers(m.x, rest), c * pc * GScalar(factor));
    }
  }
  return out;
}

LinearityCertificate check_linear(const WeylElement& w) {
  LinearityCertificate cert;
  for (const auto& [m, c] : w.terms()) {
    if (m.x_degree() > 1 || m.d_degree() > 1) {
      cert.is_linear = false;
      cert.offending_terms.push_back(m);
    }
    const bool literal = m.x.size() <= 1 && m.d.size() <= 1 && m.total_degree() >= 1 &&
                         m.total_degree() <= 2;
    if (!literal) {
      cert.literal_degree_condition = false;
      cert.literal_offending_terms.push_back(m);
    }
  }
  return cert;
}

} // namespace lvf
