#include "doctest.h"

#include "lvf/cuntz.hpp"
#include "lvf/errors.hpp"
#include "lvf/random_objects.hpp"

using namespace lvf;

namespace {

bool all_pass(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs)
    if (!r.passed()) return false;
  return !rs.empty();
}

} // namespace

TEST_CASE("reduction rules") {
  CHECK(reduce({{1, true}, {1, false}}) == CuntzElement::constant(GScalar(1)));
  CHECK(reduce({{1, true}, {2, false}}).is_zero());
  CHECK(reduce({{1, false}, {2, true}, {2, false}, {3, true}}) == CuntzElement::word({{1}, {3}}));
  CHECK(reduce({{1, false}, {2, true}}) == CuntzElement::word({{1}, {2}}));
  CHECK(reduce({{2, true}, {1, false}, {3, false}}).is_zero());
  CHECK(reduce({{1, true}, {1, false}, {3, false}}) == CuntzElement::s(3));
}

TEST_CASE("word product cases") {
  CHECK(multiply_words({{1}, {2, 3}}, {{2, 3, 4}, {5}}) == CuntzWord{{1, 4}, {5}});
  CHECK(multiply_words({{1}, {2, 3, 6}}, {{2, 3}, {5}}) == CuntzWord{{1}, {5, 6}});
  CHECK_FALSE(multiply_words({{}, {2}}, {{3}, {}}).has_value());
  CHECK_FALSE(multiply_words({{1}, {2, 3}}, {{3, 2}, {}}).has_value());
}

TEST_CASE("text form") {
  const CuntzElement e = CuntzElement::parse("(1/2) s[1]s[3] s*[2] + s*[4]");
  CHECK(CuntzElement::parse(e.to_string()) == e);
  CHECK(e.coefficient({{1, 3}, {2}}) == GScalar(Rational(1, 2)));
  CHECK(CuntzElement::parse("s*[1] s[1]") == CuntzElement::constant(GScalar(1)));
  CHECK(CuntzElement::word({{}, {1, 2}}).to_string() == "s*[2]s*[1]");
  CHECK_THROWS_AS(CuntzElement::parse("t[1]"), ParseError);
}

TEST_CASE("star is an antilinear antihomomorphism") {
  Rng rng(31);
  for (int i = 0; i < 30; ++i) {
    CuntzElement x, y;
    for (int t = 0; t < 3; ++t) {
      std::vector<SignedGenerator> a, b;
      for (int k = 0; k < 3; ++k) {
        a.push_back({rng.uniform(1, 3), rng.coin()});
        b.push_back({rng.uniform(1, 3), rng.coin()});
      }
      x += rng.scalar(true) * reduce(a);
      y += rng.scalar(true) * reduce(b);
    }
    CHECK((x * y).star() == y.star() * x.star());
    CHECK(x.star().star() == x);
  }
}

TEST_CASE("generator embedding") {
  const IndexWindow w = IndexWindow::integral(1, 2);
  const PairingMatrix id = PairingMatrix::identity(w);
  CHECK(cuntz_D(PairingMatrix::unit(w, 1, 2), id) == CuntzElement::word({{1}, {2}}));
  CHECK(cuntz_D(PairingMatrix::zero(w), id).is_zero());
  CHECK(cuntz_del(VectorCoeffs::unit(w, 2), id) == CuntzElement::s_star(2));
  CHECK(cuntz_delbar(VectorCoeffs::unit(w, 1)) == CuntzElement::s(1));
}

TEST_CASE("Cuntz commutation relations on random instances") {
  Rng rng(37);
  for (int i = 0; i < 30; ++i) {
    const IndexWindow w = IndexWindow::integral(0, rng.uniform(0, 5));
    const bool c = i % 3 == 0;
    CHECK(all_pass(verify_cuntz_relations(random_pairing(rng, w, std::nullopt, c), random_pairing(rng, w, std::nullopt, c),
                                          random_pairing(rng, w, std::nullopt, c), random_vector(rng, w, c),
                                          random_vector(rng, w, c), random_vector(rng, w, c))));
  }
}

TEST_CASE("homotope embedding") {
  Rng rng(41);
  for (std::size_t k : {2u, 3u}) {
    for (int i = 0; i < 4; ++i) {
      const AlgebraModel x = AlgebraModel::matrix_algebra(k, AlgebraModel::matrix_element(random_exact(rng, k, k)));
      AlgebraModel::Vector a(k * k), b(k * k), h(k * k);
      for (std::size_t j = 0; j < k * k; ++j) {
        a[j] = rng.rational();
        b[j] = rng.rational();
        h[j] = rng.rational();
      }
      CHECK(all_pass(verify_homotope_relations(x, a, b, h, x.coeffs(a), x.coeffs(b))));
      CHECK(q_commutator_check(x, a, b, GScalar(Rational(1, 2))).passed());
    }
  }
  const AlgebraModel x = AlgebraModel::matrix_algebra(2, AlgebraModel::matrix_element(ExactMatrix::identity(2)));
  CHECK(homotope_embed(x, AlgebraModel::Vector(4)).is_zero());
  const auto e = x.homotope_identity();
  REQUIRE(e);
  CHECK(*e == AlgebraModel::matrix_element(ExactMatrix::identity(2)));
}

TEST_CASE("injectivity") {
  ExactMatrix rho(2, 2);
  rho(0, 1) = GScalar(1);
  rho(1, 0) = GScalar(3);
  const InjectivityResult inv = injectivity_check(AlgebraModel::matrix_algebra(2, AlgebraModel::matrix_element(rho)));
  CHECK(inv.has_homotope_identity);
  CHECK(inv.kernel.empty());
  CHECK(inv.check.passed());

  const InjectivityResult zero = injectivity_check(AlgebraModel::matrix_algebra(2, AlgebraModel::Vector(4)));
  CHECK_FALSE(zero.has_homotope_identity);
  CHECK(zero.kernel.size() == 4);

  AlgebraModel::Vector e11(4);
  e11[0] = GScalar(1);
  const InjectivityResult rank1 = injectivity_check(AlgebraModel::matrix_algebra(2, e11));
  CHECK_FALSE(rank1.has_homotope_identity);
  CHECK(rank1.kernel.size() == 2);
  CHECK(rank1.check.passed());
}
