#include "doctest.h"

#include <cmath>
#include <numbers>

#include "lvf/errors.hpp"
#include "lvf/random_objects.hpp"
#include "lvf/wavelet.hpp"

using namespace lvf;

namespace {

bool all_pass(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs)
    if (!r.passed()) return false;
  return !rs.empty();
}

LaurentPoly random_poly(Rng& rng) {
  LaurentPoly p;
  for (int i = 0; i < 5; ++i) p.add_term(rng.uniform(-12, 12), rng.scalar(rng.coin()));
  return p;
}

} // namespace

TEST_CASE("laurent polynomials") {
  const LaurentPoly p = LaurentPoly::parse("z^{-2} + (1/2) z^{3}");
  CHECK(p.coefficient(-2) == GScalar(1));
  CHECK(p.coefficient(3) == GScalar(Rational(1, 2)));
  CHECK(LaurentPoly::parse(p.to_string()) == p);
  CHECK(p.compose_power(2) == LaurentPoly::parse("z^{-4} + (1/2) z^{6}"));
  CHECK(p.circle_conj() == LaurentPoly::parse("z^{2} + (1/2) z^{-3}"));
  CHECK(p.norm2() == Rational(5, 4));
  const std::complex<double> z = std::polar(1.0, 0.7);
  CHECK(std::abs(p.circle_conj().evaluate(z) - std::conj(p.evaluate(z))) < 1e-12);
  CHECK(haar_mean(LaurentPoly::parse("3 + z")) == GScalar(3));
}

TEST_CASE("branch sums by exponent arithmetic") {
  const LaurentPoly p = LaurentPoly::parse("z^{4} + z^{3} + 2 z^{-2}");
  CHECK(branch_average(p, 2) == LaurentPoly::parse("z^{2} + 2 z^{-1}"));
  CHECK(branch_mean(p, 2) == LaurentPoly::parse("z^{4} + 2 z^{-2}"));
  // Numerical cross-check of the branch mean at one point.
  const std::complex<double> z = std::polar(1.0, 0.3);
  std::complex<double> avg = 0.0;
  for (int j = 0; j < 3; ++j) avg += p.evaluate(z * std::polar(1.0, 2.0 * std::numbers::pi * j / 3.0));
  CHECK(std::abs(avg / 3.0 - branch_mean(p, 3).evaluate(z)) < 1e-12);
}

TEST_CASE("standard QMF systems and a broken one") {
  for (std::int64_t n : {2, 3, 4}) CHECK(all_pass(verify_qmf(standard_qmf(n))));
  QMFSystem broken = standard_qmf(2);
  broken.filters[1] = LaurentPoly::monomial(1, GScalar(2));
  CHECK_FALSE(all_pass(verify_qmf(broken)));
}

TEST_CASE("Cuntz relations of the filter operators") {
  for (std::int64_t n : {2, 3}) {
    const QMFSystem sys = standard_qmf(n);
    for (std::int64_t k = -10; k <= 10; ++k) {
      const LaurentPoly zk = LaurentPoly::monomial(k);
      LaurentPoly sum;
      for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
        sum += S(i, S_star(i, zk, sys), sys);
        for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
          CHECK(S_star(i, S(j, zk, sys), sys) == (i == j ? zk : LaurentPoly()));
      }
      CHECK(sum == zk);
    }
  }
}

TEST_CASE("wavelet D routes agree") {
  Rng rng(43);
  for (std::int64_t n : {2, 3, 4}) {
    const QMFSystem sys = standard_qmf(n);
    const IndexWindow w = IndexWindow::integral(0, n - 1);
    for (int i = 0; i < 10; ++i) {
      const ExactMatrix p = random_exact(rng, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
      const LaurentPoly f = random_poly(rng);
      CHECK(wavelet_D(p, sys, f) == wavelet_D_composed(p, sys, f));
      CHECK(apply_cuntz(cuntz_D(PairingMatrix::from_exact(w, p), PairingMatrix::identity(w)), f, sys) ==
            wavelet_D(p, sys, f));
    }
  }
  const QMFSystem sys = standard_qmf(2);
  ExactMatrix e01(2, 2);
  e01(0, 1) = GScalar(1);
  const LaurentPoly f = LaurentPoly::parse("z^{3} + 2 z^{-1} + 5");
  CHECK(wavelet_D(e01, sys, f) == S(0, S_star(1, f, sys), sys));
}

TEST_CASE("homotope identity acts as the identity") {
  // C^2 with coordinatewise product and rho = (1, 1).
  std::vector<std::vector<AlgebraModel::Vector>> prod(2, std::vector<AlgebraModel::Vector>(2, AlgebraModel::Vector(2)));
  prod[0][0][0] = GScalar(1);
  prod[1][1][1] = GScalar(1);
  const AlgebraModel x(prod, {GScalar(1), GScalar(1)});
  const auto e = x.homotope_identity();
  REQUIRE(e);
  const QMFSystem sys = standard_qmf(2);
  const LaurentPoly f = LaurentPoly::parse("z^{-3} + (2/3) z^{2} + 1");
  CHECK(apply_cuntz(homotope_embed(x, *e), f, sys) == f);
}

TEST_CASE("normal forms act like their generator sequences") {
  Rng rng(47);
  const QMFSystem sys = standard_qmf(3);
  for (int i = 0; i < 30; ++i) {
    std::vector<SignedGenerator> seq;
    for (int k = 0; k < 4; ++k) seq.push_back({rng.uniform(0, 2), rng.coin()});
    const LaurentPoly f = random_poly(rng);
    CHECK(apply_cuntz(reduce(seq), f, sys) == apply_sequence(seq, f, sys));
  }
}
