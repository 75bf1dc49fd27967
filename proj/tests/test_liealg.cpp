#include "doctest.h"

#include "lvf/errors.hpp"
#include "lvf/liealg.hpp"
#include "lvf/random_objects.hpp"

using namespace lvf;

namespace {

bool all_pass(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs)
    if (!r.passed()) return false;
  return !rs.empty();
}

} // namespace

TEST_CASE("structure constants basics") {
  const StructureConstants s = sl2();
  CHECK(s.dimension() == 3);
  CHECK(s.is_antisymmetric());
  CHECK(s.jacobi_check().passed());
  const auto he = s.bracket(s.at({"h", {}}), s.at({"e", {}}));
  REQUIRE(he);
  CHECK(*he == AlgebraVector{{s.at({"e", {}}), GScalar(2)}});
  StructureConstants broken = s;
  broken.set_bracket_one_sided(0, 1, {{2, GScalar(1)}});
  CHECK_FALSE(broken.is_antisymmetric());
}

TEST_CASE("jacobi failure is detected") {
  StructureConstants l({{"a", {}}, {"b", {}}, {"c", {}}});
  l.set_bracket(0, 1, {{2, GScalar(1)}});
  l.set_bracket(1, 2, {{0, GScalar(1)}});
  l.set_bracket(0, 2, {{0, GScalar(1)}});
  CHECK_FALSE(l.jacobi_check().passed());
}

TEST_CASE("random solvable algebras satisfy Jacobi") {
  Rng rng(9);
  for (int i = 0; i < 10; ++i) CHECK(random_solvable4(rng).jacobi_check().passed());
}

TEST_CASE("families") {
  AlgebraFamily f;
  f.kind = AlgebraFamily::Kind::witt;
  f.window = IndexWindow::integral(-3, 3);
  const StructureConstants witt = build_family(f);
  CHECK(witt.jacobi_check().passed());
  const auto br = witt.bracket(witt.at({"L", 1}), witt.at({"L", 2}));
  REQUIRE(br);
  CHECK(*br == AlgebraVector{{witt.at({"L", 3}), GScalar(1)}});
  CHECK_FALSE(witt.bracket(witt.at({"L", 2}), witt.at({"L", 3})).has_value());

  f.kind = AlgebraFamily::Kind::heisenberg_virasoro;
  const StructureConstants hv = build_family(f);
  const auto dd = hv.bracket(hv.at({"d", 1}), hv.at({"del", 2}));
  REQUIRE(dd);
  CHECK(*dd == AlgebraVector{{hv.at({"del", 3}), GScalar(2)}});

  f.kind = AlgebraFamily::Kind::schrodinger_virasoro;
  f.s = Rational(1, 2);
  f.rho = Rational(1, 3);
  const StructureConstants sv = build_family(f);
  CHECK(sv.jacobi_check().passed());
  CHECK(sv.find({"Y", HalfIndex::from_doubled(1)}).has_value());
  f.s = Rational(1, 3);
  CHECK_THROWS_AS(build_family(f), InvalidArgument);
  CHECK(AlgebraFamily::parse_kind("heisenberg-virasoro") == AlgebraFamily::Kind::heisenberg_virasoro);
}

TEST_CASE("realizations reproduce the structure constants") {
  const IndexWindow labels = IndexWindow::integral(-2, 2);
  const IndexWindow space = IndexWindow::integral(-12, 12);
  JSContext ctx;
  ctx.window = space;
  ctx.margin = 4;
  const RealizationData hv = heisenberg_virasoro_realization(labels, space);
  CHECK(all_pass(verify_realization(hv.algebra, hv.realization, hv.bands, ctx)));
  const RealizationData cw = circle_witt_realization(labels, space);
  CHECK(all_pass(verify_realization(cw.algebra, cw.realization, cw.bands, ctx)));
  const RealizationData sv = schrodinger_virasoro_realization(Rational(1, 3), false, labels, space);
  CHECK(all_pass(verify_realization(sv.algebra, sv.realization, sv.bands, ctx)));
  const IndexWindow hspace(HalfIndex::from_doubled(-23), HalfIndex::from_doubled(23));
  ctx.window = hspace;
  const RealizationData svh = schrodinger_virasoro_realization(Rational(1, 2), true, labels, hspace);
  CHECK(all_pass(verify_realization(svh.algebra, svh.realization, svh.bands, ctx)));
}

TEST_CASE("a wrong realization is rejected") {
  const IndexWindow labels = IndexWindow::integral(-2, 2);
  const IndexWindow space = IndexWindow::integral(-12, 12);
  JSContext ctx;
  ctx.window = space;
  ctx.margin = 4;
  RealizationData hv = heisenberg_virasoro_realization(labels, space);
  hv.realization[{"d", 1}] = GScalar(2) * hv.realization[{"d", 1}];
  CHECK_FALSE(all_pass(verify_realization(hv.algebra, hv.realization, hv.bands, ctx)));
}

TEST_CASE("dynamics") {
  const IndexWindow w = IndexWindow::integral(0, 3);
  const std::vector<std::int64_t> shift = {1, 2, 3, 0};
  Rng rng(4);
  for (std::uint32_t n = 0; n <= 4; ++n) CHECK(dynamics_check(shift, random_vector(rng, w), n).passed());
  for (int i = 0; i < 10; ++i) {
    const auto h = random_map(rng, 5);
    CHECK(dynamics_check(h, random_vector(rng, IndexWindow::integral(0, 4)), static_cast<std::uint32_t>(i % 5)).passed());
  }
}

TEST_CASE("cocycles and central extensions") {
  const StructureConstants s = sl2();
  const ExactMatrix phi = cocycle_table(s, basis_vector(0), adjoint_weight(s, 2));
  CHECK(cocycle_check(s, phi).passed());
  const StructureConstants ext = extend_by_cocycle(s, phi);
  CHECK(ext.dimension() == 4);
  CHECK(ext.jacobi_check().passed());

  const StructureConstants ab = abelian(2);
  const StructureConstants sum = extend_by_cocycle(ab, ExactMatrix(2, 2));
  CHECK(sum.center().size() == 3);

  AlgebraFamily f;
  f.kind = AlgebraFamily::Kind::heisenberg_virasoro;
  f.window = IndexWindow::integral(0, 3);
  const StructureConstants hv = build_family(f);
  ExactMatrix bad(hv.dimension(), hv.dimension());
  bad(hv.at({"d", 1}), hv.at({"d", 2})) = GScalar(1);
  bad(hv.at({"d", 2}), hv.at({"d", 1})) = GScalar(-1);
  CHECK_FALSE(cocycle_check(hv, bad).passed());
  CHECK_THROWS_AS(extend_by_cocycle(hv, bad), CocycleFailure);
  ExactMatrix asym(3, 3);
  asym(0, 1) = GScalar(1);
  CHECK_FALSE(cocycle_check(s, asym).passed());
}
