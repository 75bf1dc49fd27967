#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "lvf/index.hpp"
#include "lvf/pairing.hpp"
#include "lvf/report.hpp"
#include "lvf/structure_constants.hpp"
#include "lvf/weyl.hpp"

namespace lvf {

enum class ScalarMode { exact, floating };

struct JSContext {
  IndexWindow window = IndexWindow::integral(0, 0);
  std::int64_t margin = 0;
  ScalarMode scalar_mode = ScalarMode::exact;
  /// The window is the whole model space, so nothing is truncated.
  bool whole_space = false;
};

/// Homogeneous polynomials of degree `degree` in the variables of `variables`.
struct WeightSpec {
  std::uint32_t degree = 1;
  IndexWindow variables = IndexWindow::integral(0, 0);
};

/// D(A) = sum <A e_a, f_b> x_a d_b. Throws InvalidArgument for pi-graded input.
WeylElement D(const PairingMatrix& a);
/// del(h) = sum <h, f_a> d_a.
WeylElement del(const VectorCoeffs& h);
/// delbar(r) = sum <e_a, r> x_a.
WeylElement delbar(const VectorCoeffs& r);

/// Sub-window on which identities built from operators with these bandwidths are exact.
/// Throws MarginViolation when the context margin is too small and EmptySafeWindow when
/// nothing is left (or a full matrix is used on a truncated window).
IndexWindow safe_window(const JSContext& ctx, const std::vector<Bandwidth>& bandwidths);

struct CommRelationsInput {
  PairingMatrix a;
  PairingMatrix b;
  VectorCoeffs h;
  VectorCoeffs g;
  VectorCoeffs r;
};

/// The four commutation relations, each as an exact comparison on the safe window.
std::vector<CheckResult> verify_comm_relations(const CommRelationsInput& in, const JSContext& ctx);

/// [-D(A), del(f_1)...del(f_n)] = sum_k del(f_1)...del(A f_k)...del(f_n).
CheckResult n_point_motion_check(const PairingMatrix& a, const std::vector<VectorCoeffs>& fs);

/// If span{e_i : i in sub} is A-invariant, D(A) maps polynomials in the remaining
/// variables (degree <= max_degree) to polynomials in those variables.
CheckResult invariant_subspace_check(const PairingMatrix& a, const IndexWindow& sub,
                                     std::uint32_t max_degree);

/// Pairing matrix of ad(v), rows and columns indexed by basis position.
PairingMatrix ad_pairing(const StructureConstants& l, const AlgebraVector& v);
/// D~(v) = D(ad v).
WeylElement tilde_D(const StructureConstants& l, const AlgebraVector& v);

/// Kernel of c |-> sum_i c_i images[i] as coefficient vectors.
std::vector<std::vector<GScalar>> linear_relations(const std::vector<WeylElement>& images);

WeylElement epsilon(const PairingMatrix& a, const PairingMatrix& b);

/// Normalized trace of w on the degree-d homogeneous polynomials.
/// Throws NotDegreePreserving if some monomial changes the polynomial degree.
GScalar weight_trace(const WeylElement& w, const WeightSpec& spec);

GScalar killing_form(const StructureConstants& l, const AlgebraVector& u, const AlgebraVector& v,
                     const WeightSpec& spec);
/// tr(ad u ad v).
GScalar classical_killing(const StructureConstants& l, const AlgebraVector& u,
                          const AlgebraVector& v);
/// phi_u(w, z) = B(ad(u) w, z).
GScalar cocycle(const StructureConstants& l, const AlgebraVector& u, const AlgebraVector& w,
                const AlgebraVector& z, const WeightSpec& spec);
/// phi_u on all basis pairs.
ExactMatrix cocycle_table(const StructureConstants& l, const AlgebraVector& u,
                          const WeightSpec& spec);

/// Weight spec matching an algebra's ad representation: variables 0..dim-1.
WeightSpec adjoint_weight(const StructureConstants& l, std::uint32_t degree);

/// Coefficients of e^{-tD(A)} del(h) e^{tD(A)} by the exact Lie series, against e^{tA}h.
CheckResult semigroup_check(const PairingMatrix& a, double t, const VectorCoeffs& h,
                            double tolerance);

inline constexpr double kFlowTimeLimit = 0.15915494309189535;  // 1/(2 pi)

/// max over the window of |(1/pi) int e_n(X_t) e_m - (e^{tA})_nm| for A = x^2 d/dx,
/// X_t(x) = x/(1-tx). Throws InvalidArgument unless 0 <= t < 1/(2 pi).
double flow_semigroup_error(std::int64_t window_size, double t, int nodes);

using SmoothFunction = std::function<double(std::span<const double>)>;

/// sum_m d_m phi(l(x)) (A* l_m)(x) with central differences.
double cylindrical_derivative(const Eigen::MatrixXd& a, const std::vector<Eigen::VectorXd>& ls,
                              const SmoothFunction& phi, const Eigen::VectorXd& x,
                              double step = 1e-6);
/// (f(x + tAx) - f(x)) / t for f = phi(l_1, ..., l_k).
double flow_derivative(const Eigen::MatrixXd& a, const std::vector<Eigen::VectorXd>& ls,
                       const SmoothFunction& phi, const Eigen::VectorXd& x, double t = 1e-6);

} // namespace lvf
