#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lvf/index.hpp"
#include "lvf/rational.hpp"

namespace lvf {

struct ComputeOptions {
  /// d-matrix: x2dx, sine, monomial, circle, sv, map.
  std::string basis = "x2dx";
  std::optional<std::int64_t> window;
  /// Field index for monomial, circle and sv bases.
  std::int64_t n = 0;
  Rational lambda;
  std::vector<Rational> c;
  Rational rho;
  Rational s;
  std::vector<std::int64_t> h;
  /// Expression for weyl-element and cuntz-element.
  std::string op;
  /// cocycle-table: sl2, abelian3, solvable4.
  std::string algebra = "sl2";
  std::string u = "h";
  std::uint32_t degree = 1;
  std::uint64_t seed = 7;
};

const std::vector<std::string>& compute_targets();

/// Canonical text of the requested object. Throws on invalid selections.
std::string compute(const std::string& what, const ComputeOptions& opts);

/// Evaluates "D(E12)", "del(e1 + 2 e3)", "eps(E12, E21)", "[D(E12), D(E21)]" or raw Weyl text.
std::string evaluate_weyl_expression(const std::string& expr);

} // namespace lvf
