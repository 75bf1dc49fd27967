#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lvf/rational.hpp"

namespace lvf {

inline constexpr const char* kConfigEnvVar = "LVF_CONFIG";

/// Parameters for one suite run. Unset optionals fall back to suite defaults.
struct SuiteConfig {
  std::string suite;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> window;
  std::optional<std::int64_t> label_range;
  std::optional<std::int64_t> instances;
  std::optional<int> quadrature_nodes;
  std::optional<Rational> lambda;
  std::optional<std::vector<Rational>> c;
  std::optional<Rational> rho;
  std::optional<Rational> s;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> max_exp;
  std::optional<std::int64_t> degree;
  std::optional<std::vector<std::int64_t>> h;
  std::optional<double> t;
  std::optional<std::string> scalar_mode;
  std::map<std::string, double> tolerances;
  std::optional<std::string> out;
  std::optional<std::string> timestamp;

  /// Reads a JSON object; rationals are strings like "1/3". Unknown keys are errors.
  static SuiteConfig from_json_text(const std::string& text);
  static SuiteConfig from_file(const std::string& path);

  /// Overlays every field that `o` sets.
  void merge(const SuiteConfig& o);

  std::uint64_t effective_seed() const { return seed.value_or(7); }
  double tolerance(const std::string& key, double fallback) const;
  /// Parameters recorded in the report, as canonical strings.
  std::map<std::string, std::string> describe() const;
};

} // namespace lvf
