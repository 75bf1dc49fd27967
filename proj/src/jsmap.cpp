#include "lvf/jsmap.hpp"

#include <cmath>
#include <numbers>

#include "lvf/errors.hpp"
#include "lvf/expm.hpp"
#include "lvf/quadrature.hpp"

namespace lvf {

namespace {

Monomial x_d(HalfIndex a, HalfIndex b) { return {{{a, 1}}, {{b, 1}}}; }

WeylElement product(const std::vector<WeylElement>& factors) {
  WeylElement out = WeylElement::constant(GScalar(1));
  for (const auto& f : factors) out = multiply(out, f);
  return out;
}

// All power products of total degree exactly d in the given variables.
void enumerate_degree(const std::vector<HalfIndex>& vars, std::size_t from, std::uint32_t d,
                      PowerProduct& cur, std::vector<PowerProduct>& out) {
  if (d == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < vars.size(); ++i) {
    for (std::uint32_t k = d; k >= 1; --k) {
      cur.emplace_back(vars[i], k);
      enumerate_degree(vars, i + 1, d - k, cur, out);
      cur.pop_back();
    }
  }
}

std::vector<PowerProduct> homogeneous_basis(const std::vector<HalfIndex>& vars, std::uint32_t d) {
  std::vector<PowerProduct> out;
  PowerProduct cur;
  enumerate_degree(vars, 0, d, cur, out);
  return out;
}

} // namespace

WeylElement D(const PairingMatrix& a) {
  if (a.pi_power() != 0) throw InvalidArgument("D needs a pairing matrix without a pi factor");
  WeylElement out;
  for (const auto& [key, c] : a.entries()) out.add_term(x_d(key.first, key.second), c);
  return out;
}

WeylElement del(const VectorCoeffs& h) {
  WeylElement out;
  for (const auto& [i, c] : h.entries()) out.add_term(Monomial{{}, {{i, 1}}}, c);
  return out;
}

WeylElement delbar(const VectorCoeffs& r) {
  WeylElement out;
  for (const auto& [i, c] : r.entries()) out.add_term(Monomial{{{i, 1}}, {}}, c);
  return out;
}

IndexWindow safe_window(const JSContext& ctx, const std::vector<Bandwidth>& bandwidths) {
  if (ctx.whole_space) return ctx.window;
  Bandwidth total = 0;
  for (const auto& b : bandwidths) total = add_bandwidths(total, b);
  if (!total) throw EmptySafeWindow("full matrices leave no safe window on a truncated space");
  if (*total > ctx.margin) {
    throw MarginViolation("total bandwidth " + std::to_string(*total) + " exceeds margin " +
                          std::to_string(ctx.margin));
  }
  auto s = ctx.window.shrink(*total);
  if (!s) throw EmptySafeWindow("window " + ctx.window.to_string() + " is narrower than the margin");
  return *s;
}

std::vector<CheckResult> verify_comm_relations(const CommRelationsInput& in, const JSContext& ctx) {
  for (const IndexWindow* w : {&in.a.window(), &in.b.window(), &in.h.window(), &in.g.window(),
                               &in.r.window()}) {
    if (!(*w == ctx.window)) throw DimensionMismatch("input window differs from the context window");
  }
  const IndexWindow s = safe_window(ctx, {in.a.bandwidth(), in.b.bandwidth()});
  const std::string w = ctx.window.to_string();
  const std::string sw = s.to_string();
  const WeylElement da = D(in.a), db = D(in.b);
  std::vector<CheckResult> out;
  out.push_back(compare_weyl("comm_relation_1 [D(A),D(B)] = D(BA-AB)",
                             restrict_to(commutator(da, db), s),
                             restrict_to(D(operator_commutator(in.b, in.a)), s), w, sw));
  out.push_back(compare_weyl("comm_relation_2 [del(h),D(A)] = del(Ah)",
                             restrict_to(commutator(del(in.h), da), s),
                             restrict_to(del(apply(in.a, in.h)), s), w, sw));
  out.push_back(compare_weyl("comm_relation_3 [del(h),del(g)] = 0",
                             commutator(del(in.h), del(in.g)), WeylElement{}, w, w));
  out.push_back(compare_weyl("comm_relation_4 [D(A),delbar(r)] = delbar(A*r)",
                             restrict_to(commutator(da, delbar(in.r)), s),
                             restrict_to(delbar(apply_adjoint(in.a, in.r)), s), w, sw));
  return out;
}

CheckResult n_point_motion_check(const PairingMatrix& a, const std::vector<VectorCoeffs>& fs) {
  std::vector<WeylElement> dels;
  for (const auto& f : fs) dels.push_back(del(f));
  const WeylElement lhs = commutator(-D(a), product(dels));
  WeylElement rhs;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    std::vector<WeylElement> factors = dels;
    factors[k] = del(apply(a, fs[k]));
    rhs += product(factors);
  }
  return compare_weyl("n_point_motion n=" + std::to_string(fs.size()), lhs, rhs,
                      a.window().to_string(), a.window().to_string());
}

CheckResult invariant_subspace_check(const PairingMatrix& a, const IndexWindow& sub,
                                     std::uint32_t max_degree) {
  const std::string name = "invariant_subspace " + sub.to_string();
  for (const auto& [key, c] : a.entries()) {
    if (sub.contains(key.first) && !sub.contains(key.second)) {
      CheckResult r = make_check(name, true, a.window().to_string());
      r.status = Status::skipped;
      r.reason = "span of the sub-window is not invariant under A";
      return r;
    }
  }
  std::vector<HalfIndex> rest;
  for (HalfIndex i : a.window().indices())
    if (!sub.contains(i)) rest.push_back(i);
  const WeylElement da = D(a);
  for (std::uint32_t d = 0; d <= max_degree; ++d) {
    for (const auto& p : homogeneous_basis(rest, d)) {
      const Polynomial image = apply_to_polynomial(da, Polynomial::monomial(p));
      for (const auto& [q, c] : image.terms()) {
        for (const auto& [v, k] : q) {
          if (sub.contains(v)) {
            CheckResult r = make_check(name, false, a.window().to_string());
            r.witness = Polynomial::monomial(p).to_string() + " -> " + image.to_string();
            return r;
          }
        }
      }
    }
  }
  return make_check(name, true, a.window().to_string());
}

PairingMatrix ad_pairing(const StructureConstants& l, const AlgebraVector& v) {
  const auto n = static_cast<std::int64_t>(l.dimension());
  return PairingMatrix::from_exact(IndexWindow::integral(0, n - 1), l.ad_matrix(v));
}

WeylElement tilde_D(const StructureConstants& l, const AlgebraVector& v) {
  return D(ad_pairing(l, v));
}

std::vector<std::vector<GScalar>> linear_relations(const std::vector<WeylElement>& images) {
  std::map<Monomial, std::size_t, MonomialOrder> rows;
  for (const auto& w : images)
    for (const auto& [m, c] : w.terms()) rows.emplace(m, rows.size());
  ExactMatrix sys(rows.size(), images.size());
  for (std::size_t j = 0; j < images.size(); ++j)
    for (const auto& [m, c] : images[j].terms()) sys(rows.at(m), j) = c;
  return sys.nullspace();
}

WeylElement epsilon(const PairingMatrix& a, const PairingMatrix& b) {
  return multiply(D(a), D(b)) + D(compose(a, b));
}

GScalar weight_trace(const WeylElement& w, const WeightSpec& spec) {
  for (const auto& [m, c] : w.terms()) {
    if (m.x_degree() != m.d_degree()) {
      throw NotDegreePreserving("term " + WeylElement::monomial(m, c).to_string() +
                                " changes the polynomial degree");
    }
  }
  const auto basis = homogeneous_basis(spec.variables.indices(), spec.degree);
  GScalar trace;
  for (const auto& p : basis) {
    trace += apply_to_polynomial(w, Polynomial::monomial(p)).coefficient(p);
  }
  return trace / GScalar(static_cast<std::int64_t>(basis.size()));
}

GScalar killing_form(const StructureConstants& l, const AlgebraVector& u, const AlgebraVector& v,
                     const WeightSpec& spec) {
  return weight_trace(epsilon(ad_pairing(l, u), ad_pairing(l, v)), spec);
}

GScalar classical_killing(const StructureConstants& l, const AlgebraVector& u,
                          const AlgebraVector& v) {
  return (l.ad_matrix(u) * l.ad_matrix(v)).trace();
}

GScalar cocycle(const StructureConstants& l, const AlgebraVector& u, const AlgebraVector& w,
                const AlgebraVector& z, const WeightSpec& spec) {
  auto uw = l.bracket(u, w);
  if (!uw) throw InvalidArgument("bracket [u, w] leaves the window");
  return killing_form(l, *uw, z, spec);
}

ExactMatrix cocycle_table(const StructureConstants& l, const AlgebraVector& u,
                          const WeightSpec& spec) {
  const std::size_t n = l.dimension();
  ExactMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = cocycle(l, u, basis_vector(i), basis_vector(j), spec);
  return out;
}

WeightSpec adjoint_weight(const StructureConstants& l, std::uint32_t degree) {
  return {degree, IndexWindow::integral(0, static_cast<std::int64_t>(l.dimension()) - 1)};
}

CheckResult semigroup_check(const PairingMatrix& a, double t, const VectorCoeffs& h,
                            double tolerance) {
  const IndexWindow& w = a.window();
  const WeylElement da = D(a);
  Eigen::VectorXd series = Eigen::VectorXd::Zero(w.size());
  WeylElement term = del(h);
  double factor = 1.0;
  for (int k = 0; k < 400 && !term.is_zero(); ++k) {
    double norm = 0.0;
    for (const auto& [m, c] : term.terms()) {
      const auto pos = index_distance(m.d.front().first, w.lo());
      const double v = factor * c.re().to_double();
      series(pos) += v;
      norm = std::max(norm, std::abs(v));
    }
    if (k > 0 && norm <= 1e-18 * std::max(1.0, series.cwiseAbs().maxCoeff())) break;
    term = commutator(term, da);
    factor *= t / static_cast<double>(k + 1);
  }
  const Eigen::VectorXd expected = expm(t * to_double_matrix(a).transpose()) * to_double_vector(h);
  const double err = (series - expected).cwiseAbs().maxCoeff();
  return compare_float("semigroup t=" + std::to_string(t), err, tolerance, w.to_string());
}

double flow_semigroup_error(std::int64_t window_size, double t, int nodes) {
  if (!(t >= 0.0 && t < kFlowTimeLimit)) {
    throw InvalidArgument("flow X_t(x) = x/(1-tx) needs 0 <= t < 1/(2 pi)");
  }
  const PairingMatrix abar = x2dx_matrix(IndexWindow::integral(1, window_size));
  const Eigen::MatrixXd e = expm(t * to_double_matrix(abar));
  double err = 0.0;
  for (std::int64_t n = 1; n <= window_size; ++n) {
    for (std::int64_t m = 1; m <= window_size; ++m) {
      const double nn = static_cast<double>(n), mm = static_cast<double>(m);
      const double lhs = quadrature_oracle([&](double x) { return std::sin(nn * x / (1.0 - t * x)); },
                                           [&](double x) { return std::sin(mm * x); }, nodes);
      err = std::max(err, std::abs(lhs - e(n - 1, m - 1)));
    }
  }
  return err;
}

double cylindrical_derivative(const Eigen::MatrixXd& a, const std::vector<Eigen::VectorXd>& ls,
                              const SmoothFunction& phi, const Eigen::VectorXd& x, double step) {
  if (ls.empty()) throw InvalidArgument("cylindrical function needs at least one covector");
  std::vector<double> args(ls.size());
  for (std::size_t m = 0; m < ls.size(); ++m) args[m] = ls[m].dot(x);
  const Eigen::VectorXd ax = a.transpose() * x;
  double sum = 0.0;
  for (std::size_t m = 0; m < ls.size(); ++m) {
    const double s = step * std::max(1.0, std::abs(args[m]));
    std::vector<double> hi = args, lo = args;
    hi[m] += s;
    lo[m] -= s;
    const double dphi = (phi(hi) - phi(lo)) / (2.0 * s);
    sum += dphi * ls[m].dot(ax);
  }
  return sum;
}

double flow_derivative(const Eigen::MatrixXd& a, const std::vector<Eigen::VectorXd>& ls,
                       const SmoothFunction& phi, const Eigen::VectorXd& x, double t) {
  auto f = [&](const Eigen::VectorXd& y) {
    std::vector<double> args(ls.size());
    for (std::size_t m = 0; m < ls.size(); ++m) args[m] = ls[m].dot(y);
    return phi(args);
  };
  const Eigen::VectorXd moved = x + t * (a.transpose() * x);
  return (f(moved) - f(x)) / t;
}

} // namespace lvf
