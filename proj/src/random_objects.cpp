#include "lvf/random_objects.hpp"

namespace lvf {

PairingMatrix random_pairing(Rng& rng, const IndexWindow& w, Bandwidth band, bool complex) {
  std::map<PairingMatrix::Key, GScalar> e;
  for (HalfIndex a : w.indices()) {
    for (HalfIndex b : w.indices()) {
      if (band && index_distance(a, b) > *band) continue;
      if (rng.uniform(0, 2) == 0) continue;
      e[{a, b}] = rng.scalar(complex);
    }
  }
  return {w, std::move(e), band};
}

VectorCoeffs random_vector(Rng& rng, const IndexWindow& w, bool complex) {
  VectorCoeffs v(w);
  for (HalfIndex a : w.indices()) {
    if (rng.uniform(0, 3) == 0) continue;
    v.set(a, rng.scalar(complex));
  }
  return v;
}

ExactMatrix random_exact(Rng& rng, std::size_t rows, std::size_t cols) {
  ExactMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.rational();
  return m;
}

std::vector<std::int64_t> random_map(Rng& rng, std::size_t n) {
  std::vector<std::int64_t> h(n);
  for (auto& v : h) v = rng.uniform(0, static_cast<std::int64_t>(n) - 1);
  return h;
}

WeylElement random_weyl(Rng& rng, std::int64_t lo, std::int64_t hi, std::uint32_t max_degree,
                        std::size_t terms) {
  WeylElement out;
  for (std::size_t t = 0; t < terms; ++t) {
    const auto deg = static_cast<std::uint32_t>(rng.uniform(0, max_degree));
    WeylElement term = WeylElement::constant(rng.rational());
    for (std::uint32_t k = 0; k < deg; ++k) {
      const HalfIndex v(rng.uniform(lo, hi));
      term = multiply(term, rng.coin() ? WeylElement::x(v) : WeylElement::d(v));
    }
    out += term;
  }
  return out;
}

} // namespace lvf
