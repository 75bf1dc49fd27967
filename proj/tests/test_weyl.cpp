#include "doctest.h"

#include "lvf/errors.hpp"
#include "lvf/random_objects.hpp"
#include "lvf/weyl.hpp"

using namespace lvf;

namespace {

WeylElement P(const char* s) { return WeylElement::parse(s); }

Polynomial x1_power(std::uint32_t k) {
  if (k == 0) return Polynomial::constant(GScalar(1));
  return Polynomial::monomial({{HalfIndex(1), k}});
}

} // namespace

TEST_CASE("normal ordering examples") {
  const auto x1 = WeylElement::x(1), d1 = WeylElement::d(1);
  CHECK(d1 * x1 == P("x[1] d[1] + 1"));
  CHECK((WeylElement::x(1) * WeylElement::d(2)) * (WeylElement::x(2) * WeylElement::d(3)) ==
        P("x[1] x[2] d[2] d[3] + x[1] d[3]"));
  CHECK((x1 * d1) * (x1 * d1) == P("x[1]^2 d[1]^2 + x[1] d[1]"));
}

TEST_CASE("(x1 d1)^2 agrees with repeated application on x1^k") {
  const WeylElement e = P("x[1] d[1]");
  for (std::uint32_t k = 0; k <= 3; ++k) {
    const Polynomial p = x1_power(k);
    CHECK(apply_to_polynomial(e * e, p) == apply_to_polynomial(e, apply_to_polynomial(e, p)));
    CHECK(apply_to_polynomial(e * e, p) == (k == 0 ? Polynomial() : [&] {
            Polynomial q = p;
            q *= GScalar(static_cast<std::int64_t>(k * k));
            return q;
          }()));
  }
}

TEST_CASE("commutator examples") {
  CHECK(commutator(P("x[1] d[2]"), P("x[2] d[1]")) == P("x[1] d[1] - x[2] d[2]"));
  CHECK(commutator(WeylElement::d(1), WeylElement::d(2)).is_zero());
  CHECK(commutator(P("x[1] d[1]"), P("x[1] d[1]")).is_zero());
  CHECK(commutator(WeylElement::d(3), WeylElement::x(3)) == WeylElement::constant(GScalar(1)));
  CHECK(commutator(WeylElement::d(3), WeylElement::x(4)).is_zero());
}

TEST_CASE("action on polynomials") {
  const Polynomial x2sq = Polynomial::monomial({{HalfIndex(2), 2}});
  CHECK(apply_to_polynomial(P("x[1] d[2]"), x2sq) ==
        Polynomial::monomial({{HalfIndex(1), 1}, {HalfIndex(2), 1}}, GScalar(2)));
  CHECK(apply_to_polynomial(WeylElement::constant(GScalar(1)), x2sq) == x2sq);
  CHECK(apply_to_polynomial(P("x[1]^2 d[1]^2 + 2 x[1] d[1]"), x1_power(3)) ==
        Polynomial::monomial({{HalfIndex(1), 3}}, GScalar(12)));
}

TEST_CASE("linearity certificate") {
  CHECK(check_linear(P("x[1] d[2]")).is_linear);
  const auto bad = check_linear(P("x[1]^2 d[1]^2"));
  CHECK_FALSE(bad.is_linear);
  REQUIRE(bad.offending_terms.size() == 1);
  CHECK(bad.offending_terms[0].to_string() == "x[1]^2 d[1]^2");
  CHECK(check_linear(WeylElement{}).is_linear);
  CHECK(check_linear(P("x[1] + d[2] + 3")).is_linear);
  const auto sq = check_linear(P("x[1]^2"));
  CHECK_FALSE(sq.is_linear);
  CHECK(sq.literal_degree_condition);
}

TEST_CASE("text format round trip and parse errors") {
  const WeylElement e = P("(3/2) x[1] d[2] + (-1+2i) x[4]^2 + x[1/2] d[-1/2]");
  CHECK(WeylElement::parse(e.to_string()) == e);
  CHECK(P("d[1] x[1]") == P("x[1] d[1] + 1"));
  CHECK(WeylElement{}.to_string() == "0");
  CHECK_THROWS_AS(P("x[1"), ParseError);
  CHECK_THROWS_AS(P("y[1]"), ParseError);
}

TEST_CASE("degree cap") {
  CHECK_THROWS_AS(multiply(P("x[1]^5"), P("x[2]^4")), DegreeCapExceeded);
  CHECK_NOTHROW(multiply(P("x[1]^5"), P("x[2]^4"), 9));
}

TEST_CASE("restriction keeps monomials inside the window") {
  const WeylElement e = P("x[1] d[2] + x[5] d[1] + 1");
  CHECK(restrict_to(e, IndexWindow::integral(0, 3)) == P("x[1] d[2] + 1"));
}

TEST_CASE("random algebra properties") {
  Rng rng(11);
  for (int i = 0; i < 60; ++i) {
    const WeylElement a = random_weyl(rng, 1, 3, 2, 3), b = random_weyl(rng, 1, 3, 2, 3),
                      c = random_weyl(rng, 1, 3, 2, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(commutator(a, b) == -commutator(b, a));
    CHECK((commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
           commutator(c, commutator(a, b)))
              .is_zero());
    CHECK(commutator(a, b * c) == commutator(a, b) * c + b * commutator(a, c));
    CHECK(WeylElement::parse(a.to_string()) == a);
  }
}
