#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lvf/gscalar.hpp"
#include "lvf/index.hpp"

namespace lvf {

/// Sorted (variable, power) pairs with no zero powers.
using PowerProduct = std::vector<std::pair<HalfIndex, std::uint32_t>>;

std::uint32_t degree(const PowerProduct& p);
PowerProduct merge_powers(const PowerProduct& a, const PowerProduct& b);

/// Normal-ordered monomial x^x d^d: every x factor sits left of every d factor.
struct Monomial {
  PowerProduct x;
  PowerProduct d;

  std::uint32_t x_degree() const { return degree(x); }
  std::uint32_t d_degree() const { return degree(d); }
  std::uint32_t total_degree() const { return x_degree() + d_degree(); }
  bool is_unit() const { return x.empty() && d.empty(); }
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical order: total degree, then x part, then d part (each lexicographic).
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct PowerProductOrder {
  bool operator()(const PowerProduct& a, const PowerProduct& b) const;
};

inline constexpr std::uint32_t kDefaultDegreeCap = 8;

/// Finitely supported element of the Weyl algebra with relations d_i x_j - x_j d_i = delta_ij.
class WeylElement {
public:
  using TermMap = std::map<Monomial, GScalar, MonomialOrder>;

  WeylElement() = default;

  static WeylElement constant(const GScalar& c);
  static WeylElement x(HalfIndex i);
  static WeylElement d(HalfIndex i);
  static WeylElement monomial(Monomial m, const GScalar& c = GScalar(1));
  /// Parses the canonical text form, e.g. "(3/2) x[1] d[2] + (-1+2i) x[4]^2".
  /// Factors may appear in any order; the result is normal-ordered.
  static WeylElement parse(std::string_view text);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  GScalar coefficient(const Monomial& m) const;
  std::uint32_t max_degree() const;

  /// Adds c*m, dropping the entry if it cancels.
  void add_term(const Monomial& m, const GScalar& c);

  WeylElement operator-() const;
  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  WeylElement& operator*=(const GScalar& c);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(const GScalar& c, WeylElement a) { return a *= c; }
  friend bool operator==(const WeylElement&, const WeylElement&) = default;

  std::string to_string() const;

private:
  TermMap terms_;
};

/// Normal-ordered product. Throws DegreeCapExceeded when a result monomial exceeds `degree_cap`.
WeylElement multiply(const WeylElement& a, const WeylElement& b,
                     std::uint32_t degree_cap = kDefaultDegreeCap);
WeylElement operator*(const WeylElement& a, const WeylElement& b);
WeylElement commutator(const WeylElement& a, const WeylElement& b,
                       std::uint32_t degree_cap = kDefaultDegreeCap);

/// Keeps only monomials whose variables all lie in `w`.
WeylElement restrict_to(const WeylElement& e, const IndexWindow& w);

/// Polynomial in the x variables.
class Polynomial {
public:
  using TermMap = std::map<PowerProduct, GScalar, PowerProductOrder>;

  Polynomial() = default;
  static Polynomial constant(const GScalar& c);
  static Polynomial monomial(PowerProduct p, const GScalar& c = GScalar(1));
  /// Throws InvalidArgument if `e` contains d factors.
  static Polynomial from_weyl(const WeylElement& e);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GScalar coefficient(const PowerProduct& p) const;
  void add_term(const PowerProduct& p, const GScalar& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator*=(const GScalar& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  WeylElement to_weyl() const;
  std::string to_string() const { return to_weyl().to_string(); }

private:
  TermMap terms_;
};

Polynomial apply_to_polynomial(const WeylElement& w, const Polynomial& p);

/// Two readings of "linear differential operator".
///
/// `is_linear` is the strict reading: every monomial lies in span{x_i d_j, x_i, d_j, 1}.
/// `literal_degree_condition` is the literal one: each monomial is x_i^t d_j^r with a
/// single x variable, a single d variable and 1 <= t + r <= 2 (admits x_i^2 and d_j^2,
/// excludes constants).
struct LinearityCertificate {
  bool is_linear = true;
  std::vector<Monomial> offending_terms;
  bool literal_degree_condition = true;
  std::vector<Monomial> literal_offending_terms;
};

LinearityCertificate check_linear(const WeylElement& w);

} // namespace lvf
