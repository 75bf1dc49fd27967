#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lvf/exact_matrix.hpp"
#include "lvf/gscalar.hpp"
#include "lvf/index.hpp"

namespace lvf {

/// Coefficients <h, f_alpha> of a vector (or <e_alpha, r> of a covector) on a window.
class VectorCoeffs {
public:
  explicit VectorCoeffs(IndexWindow window) : window_(window) {}

  static VectorCoeffs unit(IndexWindow window, HalfIndex at);

  const IndexWindow& window() const { return window_; }
  const std::map<HalfIndex, GScalar>& entries() const { return entries_; }
  GScalar operator[](HalfIndex i) const;
  /// Throws InvalidArgument outside the window.
  void set(HalfIndex i, const GScalar& c);
  void add(HalfIndex i, const GScalar& c);
  bool is_zero() const { return entries_.empty(); }

  VectorCoeffs& operator+=(const VectorCoeffs& o);
  VectorCoeffs scaled(const GScalar& c) const;
  friend VectorCoeffs operator+(VectorCoeffs a, const VectorCoeffs& b) { return a += b; }
  friend bool operator==(const VectorCoeffs& a, const VectorCoeffs& b) {
    return a.window_ == b.window_ && a.entries_ == b.entries_;
  }

private:
  IndexWindow window_;
  std::map<HalfIndex, GScalar> entries_;
};

/// nullopt means "full" (no band structure).
using Bandwidth = std::optional<std::int64_t>;

std::string bandwidth_to_string(const Bandwidth& b);
Bandwidth add_bandwidths(const Bandwidth& a, const Bandwidth& b);

/// Truncated pairing data M[alpha][beta] = <A e_alpha, f_beta>, i.e. the coefficient of
/// e_beta in A e_alpha. Composition of operators therefore reverses matrix order:
/// the pairing matrix of A o B is M_B * M_A.
///
/// Entries may carry a common symbolic factor pi^k with k in {0, 1}.
class PairingMatrix {
public:
  using Key = std::pair<HalfIndex, HalfIndex>;

  /// Throws InvalidArgument if an entry leaves the window or the declared band.
  PairingMatrix(IndexWindow window, std::map<Key, GScalar> entries, Bandwidth bandwidth,
                int pi_power = 0);

  static PairingMatrix zero(IndexWindow window) { return {window, {}, 0}; }
  static PairingMatrix identity(IndexWindow window);
  /// Single entry <A e_row, f_col> = c.
  static PairingMatrix unit(IndexWindow window, HalfIndex row, HalfIndex col,
                            const GScalar& c = GScalar(1));
  /// Rows and columns of `m` map to window indices lo, lo+1, ...
  static PairingMatrix from_exact(IndexWindow window, const ExactMatrix& m,
                                  Bandwidth bandwidth = std::nullopt);

  const IndexWindow& window() const { return window_; }
  const Bandwidth& bandwidth() const { return bandwidth_; }
  int pi_power() const { return pi_power_; }
  const std::map<Key, GScalar>& entries() const { return entries_; }
  GScalar entry(HalfIndex row, HalfIndex col) const;
  bool is_zero() const { return entries_.empty(); }

  ExactMatrix to_exact() const;
  /// Adjoint with respect to the pairing.
  PairingMatrix transpose() const;
  PairingMatrix scaled(const GScalar& c) const;
  /// Sum of two matrices on the same window with the same pi grade.
  PairingMatrix operator+(const PairingMatrix& o) const;
  PairingMatrix operator-(const PairingMatrix& o) const;
  /// Same data, narrower declared band. Throws if an entry falls outside it.
  PairingMatrix with_bandwidth(Bandwidth b) const;

  friend bool operator==(const PairingMatrix& a, const PairingMatrix& b) {
    return a.window_ == b.window_ && a.pi_power_ == b.pi_power_ && a.entries_ == b.entries_;
  }

  /// Row-per-line table; the pi factor is spelled "*pi".
  std::string to_table() const;

private:
  IndexWindow window_;
  std::map<Key, GScalar> entries_;
  Bandwidth bandwidth_;
  int pi_power_ = 0;
};

/// Pairing matrix of the operator outer o inner, summing over the shared window.
PairingMatrix compose(const PairingMatrix& outer, const PairingMatrix& inner);
/// Operator commutator [A, B] = AB - BA.
PairingMatrix operator_commutator(const PairingMatrix& a, const PairingMatrix& b);
/// Coefficients of A h.
VectorCoeffs apply(const PairingMatrix& a, const VectorCoeffs& h);
/// Coefficients of A* r.
VectorCoeffs apply_adjoint(const PairingMatrix& a, const VectorCoeffs& r);

/// Concrete bases and operator families the providers below know about.
struct BasisSpec {
  enum class Kind {
    sine_0_2pi,
    laurent_monomial,
    fourier_circle,
    standard_finite,
    schrodinger_virasoro,
    custom_matrix,
  };
  Kind kind = Kind::standard_finite;
  Rational rho;       // schrodinger_virasoro only
  bool half_shift = false;  // schrodinger_virasoro only: s = 1/2
  std::optional<ExactMatrix> custom;  // custom_matrix only

  static BasisSpec parse_kind(const std::string& name);
  std::string kind_name() const;
  /// Throws InvalidArgument when kind-specific parameters are inconsistent.
  void validate() const;
};

/// (e_n d/dx e_m, e_k)_H for e_j = sin(j x) and (f,g)_H = (1/pi) int_0^{2pi} f g.
Rational sine_derivative_triple(std::int64_t n, std::int64_t m, std::int64_t k);

/// A = lambda d^2/dx^2 + (1 - lambda) v d/dx with v = sum_m c_m sin(m x), on the sine basis.
PairingMatrix sine_operator_matrix(const Rational& lambda, const VectorCoeffs& c,
                                   IndexWindow window);

/// A = x^2 d/dx on the sine basis; entries are rational multiples of pi.
PairingMatrix x2dx_matrix(IndexWindow window);

/// X_n = x^n d/dx on Laurent monomials: entry (k, k+n-1) = k.
PairingMatrix monomial_field_matrix(std::int64_t n, IndexWindow window);

/// e^{in theta} d/dtheta on the Fourier basis e^{ik theta}: entry (k, k+n) = i k.
PairingMatrix circle_field_matrix(std::int64_t n, IndexWindow window);

/// A_m e_p = (p - m rho) e_{m+p} on the index set Z + s.
PairingMatrix sv_action_matrix(std::int64_t m, const Rational& rho, bool half_shift,
                               IndexWindow window);

/// A phi = phi o h on R^{0..N-1}: entry (k, l) = 1 iff h(l) = k.
PairingMatrix map_induced_matrix(const std::vector<std::int64_t>& h);

} // namespace lvf
