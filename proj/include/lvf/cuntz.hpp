#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lvf/exact_matrix.hpp"
#include "lvf/gscalar.hpp"
#include "lvf/pairing.hpp"
#include "lvf/report.hpp"

namespace lvf {

/// s_mu s_nu^* with mu = left and nu = right. Already irreducible by shape.
struct CuntzWord {
  std::vector<std::int64_t> left;
  std::vector<std::int64_t> right;

  bool is_unit() const { return left.empty() && right.empty(); }
  std::string to_string() const;
  friend bool operator==(const CuntzWord&, const CuntzWord&) = default;
  friend auto operator<=>(const CuntzWord&, const CuntzWord&) = default;
};

/// Product of two words, nullopt when an s_j^* s_k (j != k) contraction kills it.
std::optional<CuntzWord> multiply_words(const CuntzWord& a, const CuntzWord& b);

/// Finite combination of normal-form words in O_infinity (no completeness relation).
class CuntzElement {
public:
  using TermMap = std::map<CuntzWord, GScalar>;

  CuntzElement() = default;
  static CuntzElement constant(const GScalar& c);
  static CuntzElement s(std::int64_t j);
  static CuntzElement s_star(std::int64_t j);
  static CuntzElement word(CuntzWord w, const GScalar& c = GScalar(1));
  /// Parses e.g. "(1/2) s[1]s[3] s*[2] + s*[4]". Factors are multiplied and reduced.
  static CuntzElement parse(std::string_view text);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GScalar coefficient(const CuntzWord& w) const;
  void add_term(const CuntzWord& w, const GScalar& c);

  /// Involution: (c s_mu s_nu^*)^* = conj(c) s_nu s_mu^*.
  CuntzElement star() const;

  CuntzElement operator-() const;
  CuntzElement& operator+=(const CuntzElement& o);
  CuntzElement& operator-=(const CuntzElement& o);
  CuntzElement& operator*=(const GScalar& c);
  friend CuntzElement operator+(CuntzElement a, const CuntzElement& b) { return a += b; }
  friend CuntzElement operator-(CuntzElement a, const CuntzElement& b) { return a -= b; }
  friend CuntzElement operator*(const GScalar& c, CuntzElement a) { return a *= c; }
  friend CuntzElement operator*(const CuntzElement& a, const CuntzElement& b);
  friend bool operator==(const CuntzElement&, const CuntzElement&) = default;

  std::string to_string() const;

private:
  TermMap terms_;
};

/// One generator s_j (star = false) or s_j^* (star = true).
struct SignedGenerator {
  std::int64_t index;
  bool star;
};

/// Normal form of a product of generators.
CuntzElement reduce(const std::vector<SignedGenerator>& sequence);

/// D(A) = sum L^b(A e_a) s_a s_b^*: coefficient matrix is the pairing matrix of L o A.
CuntzElement cuntz_D(const PairingMatrix& a, const PairingMatrix& l);
/// del(h) = sum L^a(h) s_a^*.
CuntzElement cuntz_del(const VectorCoeffs& h, const PairingMatrix& l);
/// delbar(f) = sum <e_a, f> s_a.
CuntzElement cuntz_delbar(const VectorCoeffs& f);

/// The four relations D(A)D(B) = D(BLA), del(h)D(A) = del(ALh),
/// D(A)delbar(f) = delbar(A* L* f), del(h)delbar(g) = <Lh, g>.
std::vector<CheckResult> verify_cuntz_relations(const PairingMatrix& a, const PairingMatrix& b,
                                                const PairingMatrix& l, const VectorCoeffs& h,
                                                const VectorCoeffs& f, const VectorCoeffs& g);

/// Finite-dimensional algebra X with a homotope weight rho.
class AlgebraModel {
public:
  using Vector = std::vector<GScalar>;

  /// products[i][j] = e_i e_j.
  AlgebraModel(std::vector<std::vector<Vector>> products, Vector rho);

  /// k x k matrices with basis E_ij at position i*k + j.
  static AlgebraModel matrix_algebra(std::size_t k, const Vector& rho);
  static Vector matrix_element(const ExactMatrix& m);

  std::size_t dimension() const { return products_.size(); }
  const Vector& rho() const { return rho_; }
  IndexWindow window() const;

  Vector multiply(const Vector& a, const Vector& b) const;
  /// a rho b.
  Vector homotope_product(const Vector& a, const Vector& b) const;
  /// e with e rho a = a rho e = a for every a, if one exists.
  std::optional<Vector> homotope_identity() const;
  /// Pairing matrix of l_a : x |-> a x.
  PairingMatrix left_multiplication(const Vector& a) const;
  VectorCoeffs coeffs(const Vector& a) const;

private:
  std::vector<std::vector<Vector>> products_;
  Vector rho_;
};

AlgebraModel::Vector operator+(const AlgebraModel::Vector& a, const AlgebraModel::Vector& b);
AlgebraModel::Vector scale(const AlgebraModel::Vector& a, const GScalar& c);

/// D(l_a) with L = l_rho.
CuntzElement homotope_embed(const AlgebraModel& x, const AlgebraModel::Vector& a);

/// The four relations of the homotope embedding for given a, b, h and functionals f, g.
std::vector<CheckResult> verify_homotope_relations(const AlgebraModel& x,
                                                   const AlgebraModel::Vector& a,
                                                   const AlgebraModel::Vector& b,
                                                   const AlgebraModel::Vector& h,
                                                   const VectorCoeffs& f, const VectorCoeffs& g);

/// D(l_a)D(l_b) - q D(l_b)D(l_a) = D(l_{b rho a - q a rho b}).
CheckResult q_commutator_check(const AlgebraModel& x, const AlgebraModel::Vector& a,
                               const AlgebraModel::Vector& b, const GScalar& q);

struct InjectivityResult {
  bool has_homotope_identity = false;
  /// Basis of {a : D(l_a) = 0}.
  std::vector<AlgebraModel::Vector> kernel;
  /// Passes when an identity exists and the kernel is trivial, or when no identity exists.
  CheckResult check;
};

InjectivityResult injectivity_check(const AlgebraModel& x);

} // namespace lvf
