#include "doctest.h"

#include <cmath>

#include "lvf/errors.hpp"
#include "lvf/expm.hpp"
#include "lvf/jsmap.hpp"
#include "lvf/liealg.hpp"
#include "lvf/random_objects.hpp"

using namespace lvf;

namespace {

WeylElement P(const char* s) { return WeylElement::parse(s); }

bool all_pass(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs)
    if (!r.passed()) return false;
  return true;
}

} // namespace

TEST_CASE("D, del and delbar examples") {
  const IndexWindow w = IndexWindow::integral(1, 3);
  CHECK(D(PairingMatrix::unit(w, 1, 2)) == P("x[1] d[2]"));
  CHECK(D(PairingMatrix::zero(w)).is_zero());
  CHECK(D(PairingMatrix::identity(w)) == P("x[1] d[1] + x[2] d[2] + x[3] d[3]"));
  VectorCoeffs h(w);
  h.set(1, GScalar(1));
  CHECK(del(h) == WeylElement::d(1));
  h.set(3, GScalar(2));
  CHECK(del(h) == P("d[1] + 2 d[3]"));
  CHECK(delbar(VectorCoeffs::unit(w, 2)) == WeylElement::x(2));
  CHECK(delbar(VectorCoeffs(w)).is_zero());
  CHECK_THROWS_AS(D(x2dx_matrix(w)), InvalidArgument);
}

TEST_CASE("safe windows") {
  JSContext ctx;
  ctx.window = IndexWindow::integral(-10, 10);
  ctx.margin = 2;
  CHECK(safe_window(ctx, {1, 1}) == IndexWindow::integral(-8, 8));
  ctx.margin = 4;
  CHECK(safe_window(ctx, {2, 2}) == IndexWindow::integral(-6, 6));
  ctx.margin = 1;
  CHECK_THROWS_AS(safe_window(ctx, {1, 1}), MarginViolation);
  ctx.margin = 10;
  CHECK_THROWS_AS(safe_window(ctx, {1, std::nullopt}), EmptySafeWindow);
  ctx.whole_space = true;
  CHECK(safe_window(ctx, {std::nullopt, std::nullopt}) == ctx.window);
}

TEST_CASE("Heisenberg pair") {
  const IndexWindow w = IndexWindow::integral(1, 2);
  const PairingMatrix a = PairingMatrix::unit(w, 1, 2), b = PairingMatrix::unit(w, 2, 1);
  // BA - AB as operators is e_1 -> e_1, e_2 -> -e_2.
  CHECK(operator_commutator(b, a) == PairingMatrix::unit(w, 1, 1) - PairingMatrix::unit(w, 2, 2));
  CHECK(commutator(D(a), D(b)) == D(operator_commutator(b, a)));
  CHECK(commutator(D(a), D(b)) == P("x[1] d[1] - x[2] d[2]"));
  CHECK(commutator(D(a), D(a)).is_zero());
}

TEST_CASE("commutation relations on random banded and full instances") {
  Rng rng(17);
  for (int i = 0; i < 40; ++i) {
    JSContext ctx;
    const bool whole = i % 3 == 0;
    const Bandwidth band = whole ? Bandwidth() : Bandwidth(rng.uniform(0, 2));
    ctx.whole_space = whole;
    ctx.margin = whole ? 0 : 2 * *band;
    ctx.window = IndexWindow::integral(1, whole ? 6 : 4 * *band + 3);
    CommRelationsInput in{random_pairing(rng, ctx.window, band), random_pairing(rng, ctx.window, band),
                          random_vector(rng, ctx.window), random_vector(rng, ctx.window),
                          random_vector(rng, ctx.window)};
    const auto rs = verify_comm_relations(in, ctx);
    REQUIRE(rs.size() == 4);
    CHECK(all_pass(rs));
    // Independent matrix oracle: P_{BA-AB} = P_A P_B - P_B P_A.
    const ExactMatrix pa = in.a.to_exact(), pb = in.b.to_exact();
    CHECK(operator_commutator(in.b, in.a).to_exact() == pa * pb - pb * pa);
  }
}

TEST_CASE("truncation is reported, not hidden") {
  JSContext ctx;
  ctx.window = IndexWindow::integral(1, 6);
  ctx.margin = 0;
  Rng rng(2);
  CommRelationsInput in{random_pairing(rng, ctx.window, std::nullopt),
                        random_pairing(rng, ctx.window, std::nullopt), random_vector(rng, ctx.window),
                        random_vector(rng, ctx.window), random_vector(rng, ctx.window)};
  CHECK_THROWS_AS(verify_comm_relations(in, ctx), EmptySafeWindow);
  CommRelationsInput bad = in;
  bad.h = VectorCoeffs(IndexWindow::integral(1, 5));
  ctx.whole_space = true;
  CHECK_THROWS_AS(verify_comm_relations(bad, ctx), DimensionMismatch);
}

TEST_CASE("n-point motion and invariant subspaces") {
  Rng rng(23);
  const IndexWindow w = IndexWindow::integral(0, 3);
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<VectorCoeffs> fs;
    for (std::size_t k = 0; k < n; ++k) fs.push_back(random_vector(rng, w));
    CHECK(n_point_motion_check(random_pairing(rng, w, std::nullopt), fs).passed());
  }
  std::map<PairingMatrix::Key, GScalar> e = {{{0, 1}, GScalar(2)}, {{2, 0}, GScalar(1)}, {{3, 3}, GScalar(-1)}};
  CHECK(invariant_subspace_check(PairingMatrix(w, e, std::nullopt), IndexWindow::integral(0, 1), 3).passed());
}

TEST_CASE("tilde D on finite algebras") {
  const StructureConstants s = sl2();
  CHECK(tilde_D(s, basis_vector(0)) == P("2 x[1] d[1] - 2 x[2] d[2]"));
  const StructureConstants ab = abelian(3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(tilde_D(ab, basis_vector(i)).is_zero());
  std::vector<WeylElement> images;
  for (std::size_t i = 0; i < 3; ++i) images.push_back(tilde_D(s, basis_vector(i)));
  CHECK(linear_relations(images).empty());
  CHECK(s.center().empty());
  CHECK(linear_relations({P("x[1] d[1]"), P("2 x[1] d[1]")}).size() == 1);
}

TEST_CASE("epsilon and the normalized trace") {
  const IndexWindow one = IndexWindow::integral(1, 1);
  const PairingMatrix id = PairingMatrix::identity(one);
  CHECK(epsilon(id, id) == P("x[1]^2 d[1]^2 + 2 x[1] d[1]"));
  const WeightSpec spec{1, IndexWindow::integral(1, 2)};
  CHECK(weight_trace(P("x[1] d[1]"), spec) == GScalar(Rational(1, 2)));
  CHECK(weight_trace(WeylElement::constant(GScalar(1)), spec) == GScalar(1));
  CHECK_THROWS_AS(weight_trace(WeylElement::d(1), spec), NotDegreePreserving);
}

TEST_CASE("trace form on sl2 and abelian algebras") {
  const StructureConstants s = sl2();
  for (std::uint32_t deg : {1u, 2u}) {
    const WeightSpec spec = adjoint_weight(s, deg);
    const GScalar c = killing_form(s, basis_vector(0), basis_vector(0), spec) /
                      classical_killing(s, basis_vector(0), basis_vector(0));
    CHECK_FALSE(c.is_zero());
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) {
        const GScalar bv = killing_form(s, basis_vector(a), basis_vector(b), spec);
        CHECK(bv == killing_form(s, basis_vector(b), basis_vector(a), spec));
        CHECK(bv == c * classical_killing(s, basis_vector(a), basis_vector(b)));
        CHECK(cocycle(s, basis_vector(0), basis_vector(a), basis_vector(a), spec).is_zero());
      }
  }
  const StructureConstants ab = abelian(2);
  const ExactMatrix t = cocycle_table(ab, basis_vector(0), adjoint_weight(ab, 1));
  CHECK(t == ExactMatrix(2, 2));
}

TEST_CASE("semigroup check in float mode") {
  const IndexWindow w = IndexWindow::integral(1, 2);
  const PairingMatrix diag(w, {{{1, 1}, GScalar(1)}, {{2, 2}, GScalar(2)}}, 0);
  VectorCoeffs h(w);
  h.set(1, GScalar(1));
  h.set(2, GScalar(1));
  CHECK(semigroup_check(diag, 1.0, h, 1e-12).passed());
  CHECK(semigroup_check(diag, 0.0, h, 0.0).passed());
  const Eigen::MatrixXd e = expm(to_double_matrix(diag));
  CHECK(e(0, 0) == doctest::Approx(std::exp(1.0)));
  CHECK(e(1, 1) == doctest::Approx(std::exp(2.0)));
}

TEST_CASE("flow time limit") {
  CHECK_THROWS_AS(flow_semigroup_error(4, kFlowTimeLimit, 64), InvalidArgument);
  CHECK_THROWS_AS(flow_semigroup_error(4, -0.01, 64), InvalidArgument);
  CHECK(flow_semigroup_error(4, 0.0, 4096) < 1e-8);
}

TEST_CASE("cylindrical derivative of a coordinate projection") {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(3, 3);
  a(0, 0) = 2.0;
  a(1, 1) = -1.0;
  a(2, 2) = 0.5;
  Eigen::VectorXd l = Eigen::VectorXd::Zero(3);
  l(1) = 1.0;
  Eigen::VectorXd x(3);
  x << 0.3, -0.7, 1.1;
  const SmoothFunction phi = [](std::span<const double> v) { return v[0]; };
  CHECK(cylindrical_derivative(a, {l}, phi, x) == doctest::Approx(-1.0 * -0.7).epsilon(1e-8));
  CHECK(flow_derivative(a, {l}, phi, x) == doctest::Approx(0.7).epsilon(1e-5));
}
