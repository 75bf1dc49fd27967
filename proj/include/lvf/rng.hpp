#pragma once

#include <cstdint>
#include <random>

#include "lvf/gscalar.hpp"

namespace lvf {

/// Seeded mt19937_64 with platform-independent sampling helpers.
///
/// The std distributions are implementation-defined, so bounded draws use
/// plain modular reduction to keep reports identical across toolchains.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }
  /// Uniform double in [lo, hi).
  double real(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  bool coin() { return (engine_() & 1) != 0; }

  /// Small rational num/den with |num| <= max_num, 1 <= den <= max_den.
  Rational rational(std::int64_t max_num = 5, std::int64_t max_den = 4) {
    return {uniform(-max_num, max_num), uniform(1, max_den)};
  }
  GScalar scalar(bool complex = false) {
    if (!complex) return rational();
    return {rational(), rational()};
  }

private:
  std::mt19937_64 engine_;
};

} // namespace lvf
