#include "doctest.h"

#include <cmath>
#include <numbers>

#include "lvf/errors.hpp"
#include "lvf/pairing.hpp"
#include "lvf/quadrature.hpp"
#include "lvf/random_objects.hpp"

using namespace lvf;

TEST_CASE("sine derivative triples") {
  CHECK(sine_derivative_triple(1, 2, 3) == Rational(1));
  CHECK(sine_derivative_triple(3, 2, 1) == Rational(1));
  CHECK(sine_derivative_triple(1, 1, 1) == Rational(0));
  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= 6; ++m)
      for (int k = 1; k <= 6; ++k) {
        const double q = quadrature_oracle([&](double x) { return std::sin(n * x) * m * std::cos(m * x); },
                                           [&](double x) { return std::sin(k * x); }, 16384);
        CHECK(std::abs(q - sine_derivative_triple(n, m, k).to_double()) < 1e-10);
      }
}

TEST_CASE("sine operator matrix") {
  const IndexWindow w = IndexWindow::integral(1, 5);
  VectorCoeffs c(w);
  c.set(2, GScalar(1));
  const PairingMatrix a = sine_operator_matrix(Rational(0), c, w);
  CHECK(a.entry(1, 1) == GScalar(Rational(1, 2)));
  Rational sum;
  for (int n = 1; n <= 5; ++n) sum += c[n].re() * sine_derivative_triple(n, 1, 1);
  CHECK(a.entry(1, 1) == GScalar(sum));

  const PairingMatrix lap = sine_operator_matrix(Rational(1), c, w);
  for (int m = 1; m <= 5; ++m)
    for (int k = 1; k <= 5; ++k) CHECK(lap.entry(m, k) == (m == k ? GScalar(-m * m) : GScalar(0)));

  const PairingMatrix half = sine_operator_matrix(Rational(1, 2), VectorCoeffs(w), w);
  for (int m = 1; m <= 5; ++m) CHECK(half.entry(m, m) == GScalar(Rational(-m * m, 2)));
  CHECK(half.entries().size() == 5);
}

TEST_CASE("x^2 d/dx on the sine basis") {
  const IndexWindow w = IndexWindow::integral(1, 6);
  const PairingMatrix a = x2dx_matrix(w);
  CHECK(a.pi_power() == 1);
  CHECK(a.entry(1, 2) == GScalar(Rational(-8, 3)));
  for (int n = 1; n <= 6; ++n) CHECK(a.entry(n, n) == GScalar(-1));
  const double q = quadrature_oracle([](double x) { return x * x * std::cos(x); },
                                     [](double x) { return std::sin(2 * x); }, 65536);
  CHECK(std::abs(q - (-8.0 / 3.0) * std::numbers::pi) < 1e-8);
  CHECK_THROWS_AS(a + PairingMatrix::identity(w), InvalidArgument);
}

TEST_CASE("quadrature oracle normalization") {
  CHECK(quadrature_oracle([](double x) { return std::sin(x); }, [](double x) { return std::sin(x); }) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(quadrature_oracle([](double x) { return std::sin(x); },
                                   [](double x) { return std::sin(2 * x); })) < 1e-10);
}

TEST_CASE("monomial, circle and index action fields") {
  const IndexWindow w = IndexWindow::integral(-4, 4);
  CHECK(monomial_field_matrix(2, w).entry(3, 4) == GScalar(3));
  CHECK(monomial_field_matrix(0, w).entry(3, 2) == GScalar(3));
  const PairingMatrix c0 = circle_field_matrix(0, w);
  for (int k = -4; k <= 4; ++k) CHECK(c0.entry(k, k) == GScalar(Rational(0), Rational(k)));
  CHECK(circle_field_matrix(1, w).entry(2, 3) == GScalar(Rational(0), Rational(2)));

  const IndexWindow hw(HalfIndex::from_doubled(-7), HalfIndex::from_doubled(7));
  const HalfIndex half = HalfIndex::from_doubled(1);
  CHECK(sv_action_matrix(1, Rational(1, 2), true, hw).entry(half, half + HalfIndex(1)).is_zero());
  CHECK(sv_action_matrix(2, Rational(1, 3), false, w).entry(1, 3) == GScalar(Rational(1, 3)));
  const PairingMatrix s0 = sv_action_matrix(0, Rational(1, 3), true, hw);
  for (HalfIndex p : hw.indices()) CHECK(s0.entry(p, p) == GScalar(Rational(p.doubled(), 2)));
}

TEST_CASE("map-induced matrices") {
  CHECK(map_induced_matrix({0, 1, 2}) == PairingMatrix::identity(IndexWindow::integral(0, 2)));
  const PairingMatrix c = map_induced_matrix({0, 0, 0});
  for (int l = 0; l < 3; ++l) {
    CHECK(c.entry(0, l) == GScalar(1));
    CHECK(c.entry(1, l).is_zero());
    CHECK(c.entry(2, l).is_zero());
  }
  // A e_k = sum over h(l) = k of e_l, checked by brute force against phi o h.
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto h = random_map(rng, 5);
    const PairingMatrix a = map_induced_matrix(h);
    const IndexWindow w = IndexWindow::integral(0, 4);
    for (std::int64_t k = 0; k < 5; ++k) {
      const VectorCoeffs image = apply(a, VectorCoeffs::unit(w, k));
      for (std::int64_t x = 0; x < 5; ++x) CHECK(image[x] == GScalar(h[static_cast<std::size_t>(x)] == k ? 1 : 0));
    }
  }
}

TEST_CASE("composition follows the pairing convention") {
  Rng rng(5);
  const IndexWindow w = IndexWindow::integral(0, 3);
  for (int i = 0; i < 10; ++i) {
    const PairingMatrix a = random_pairing(rng, w, std::nullopt), b = random_pairing(rng, w, std::nullopt);
    const VectorCoeffs h = random_vector(rng, w);
    CHECK(apply(compose(a, b), h) == apply(a, apply(b, h)));
    CHECK(compose(a, b).to_exact() == b.to_exact() * a.to_exact());
    CHECK(apply_adjoint(compose(a, b), h) == apply_adjoint(b, apply_adjoint(a, h)));
  }
}

TEST_CASE("band and window validation") {
  const IndexWindow w = IndexWindow::integral(0, 3);
  CHECK_THROWS_AS(PairingMatrix(w, {{{0, 3}, GScalar(1)}}, 1), InvalidArgument);
  CHECK_THROWS_AS(PairingMatrix(w, {{{0, 5}, GScalar(1)}}, std::nullopt), InvalidArgument);
  CHECK(add_bandwidths(1, 2) == Bandwidth(3));
  CHECK_FALSE(add_bandwidths(1, std::nullopt).has_value());
}

TEST_CASE("basis spec kinds") {
  CHECK(BasisSpec::parse_kind("sine_0_2pi").kind == BasisSpec::Kind::sine_0_2pi);
  CHECK_THROWS(BasisSpec::parse_kind("nonsense"));
  BasisSpec s = BasisSpec::parse_kind("schrodinger_virasoro");
  CHECK_NOTHROW(s.validate());
}
