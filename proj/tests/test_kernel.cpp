#include "doctest.h"

#include "lvf/errors.hpp"
#include "lvf/exact_matrix.hpp"
#include "lvf/gscalar.hpp"
#include "lvf/index.hpp"
#include "lvf/rational.hpp"
#include "lvf/report.hpp"
#include "lvf/rng.hpp"

using namespace lvf;

TEST_CASE("rational arithmetic stays in lowest terms") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -3) == Rational(-1, 3));
  CHECK((Rational(1, 2) + Rational(1, 3)).to_string() == "5/6");
  CHECK((Rational(3, 4) * Rational(4, 3)) == Rational(1));
  CHECK(Rational(-6, 3).to_string() == "-2");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational::parse("-7/21") == Rational(-1, 3));
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("1/x"), ParseError);
}

TEST_CASE("rational arithmetic does not overflow") {
  Rational big(1);
  for (int i = 0; i < 40; ++i) big *= Rational(1000000007);
  CHECK((big / big) == Rational(1));
  CHECK(big.to_string().size() > 300);
}

TEST_CASE("gaussian rationals") {
  const GScalar i = GScalar::i();
  CHECK(i * i == GScalar(-1));
  CHECK(GScalar::parse("1/2-3i") == GScalar(Rational(1, 2), Rational(-3)));
  CHECK(GScalar::parse("-i") == -i);
  CHECK(GScalar::parse("2") == GScalar(2));
  const GScalar z(Rational(3), Rational(4));
  CHECK(z * z.conj() == GScalar(25));
  CHECK(z * z.inverse() == GScalar(1));
  CHECK(z.to_string() == "3+4i");
  CHECK(GScalar::parse(z.to_string()) == z);
  CHECK_THROWS_AS(GScalar(0).inverse(), DivisionByZero);
}

TEST_CASE("half indices and windows") {
  CHECK(HalfIndex::parse("3/2") == HalfIndex::from_doubled(3));
  CHECK(HalfIndex::parse("-2") == HalfIndex(-2));
  CHECK(HalfIndex::from_doubled(1).to_string() == "1/2");
  CHECK_THROWS(HalfIndex::parse("2/2"));
  CHECK_THROWS_AS(HalfIndex::from_doubled(1).to_integer(), InvalidArgument);

  const IndexWindow w = IndexWindow::parse("[-2..3]");
  CHECK(w.size() == 6);
  CHECK(w.contains(HalfIndex(0)));
  CHECK_FALSE(w.contains(HalfIndex(4)));
  CHECK(w.shrink(2) == IndexWindow::integral(0, 1));
  CHECK_FALSE(w.shrink(3).has_value());
  const IndexWindow h(HalfIndex::from_doubled(-3), HalfIndex::from_doubled(3));
  CHECK(h.half_shift());
  CHECK(h.size() == 4);
  CHECK_THROWS_AS(IndexWindow(HalfIndex(0), HalfIndex::from_doubled(3)), InvalidArgument);
  CHECK_THROWS_AS(IndexWindow::integral(3, 1), InvalidArgument);
}

TEST_CASE("exact matrix rank and nullspace") {
  ExactMatrix m(2, 3);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(0, 2) = 3;
  m(1, 0) = 2;
  m(1, 1) = 4;
  m(1, 2) = 6;
  CHECK(m.rank() == 1);
  const auto ns = m.nullspace();
  REQUIRE(ns.size() == 2);
  for (const auto& v : ns) CHECK((v[0] + GScalar(2) * v[1] + GScalar(3) * v[2]).is_zero());
  CHECK(ExactMatrix::identity(3).rank() == 3);
  CHECK((m * m.transpose())(0, 0) == GScalar(14));
}

TEST_CASE("seeded rng is reproducible") {
  Rng a(7), b(7), c(8);
  bool differ = false;
  for (int i = 0; i < 20; ++i) {
    const auto x = a.uniform(-5, 5);
    CHECK(x == b.uniform(-5, 5));
    CHECK(x >= -5);
    CHECK(x <= 5);
    differ = differ || x != c.uniform(-5, 5);
  }
  CHECK(differ);
}

TEST_CASE("report ordering and exit contract") {
  Report r;
  r.suite = "demo";
  r.checks.push_back(make_check("b", true));
  r.checks.push_back(make_check("a", true));
  CheckResult skipped = make_check("c", true);
  skipped.status = Status::skipped;
  skipped.reason = "not applicable";
  r.checks.push_back(skipped);
  r.finalize();
  CHECK(r.checks.front().name == "a");
  CHECK(r.all_passed());
  r.checks.push_back(make_check("d", false));
  CHECK_FALSE(r.all_passed());
  CHECK(r.count(Status::fail) == 1);
  const std::string j = r.to_json();
  CHECK(j.find("\"schema_version\"") != std::string::npos);
  CHECK(j == r.to_json());
}

TEST_CASE("float comparison records error") {
  const CheckResult ok = compare_float("x", 1e-9, 1e-8);
  CHECK(ok.passed());
  REQUIRE(ok.max_abs_error.has_value());
  CHECK(*ok.max_abs_error == doctest::Approx(1e-9));
  CHECK_FALSE(compare_float("y", 1e-7, 1e-8).passed());
}
