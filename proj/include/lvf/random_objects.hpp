#pragma once

#include <cstdint>
#include <vector>

#include "lvf/exact_matrix.hpp"
#include "lvf/pairing.hpp"
#include "lvf/rng.hpp"
#include "lvf/weyl.hpp"

namespace lvf {

/// Random rational pairing matrix with entries only inside the band (nullopt = full).
PairingMatrix random_pairing(Rng& rng, const IndexWindow& w, Bandwidth band, bool complex = false);
VectorCoeffs random_vector(Rng& rng, const IndexWindow& w, bool complex = false);
ExactMatrix random_exact(Rng& rng, std::size_t rows, std::size_t cols);
/// Total map on {0..n-1}.
std::vector<std::int64_t> random_map(Rng& rng, std::size_t n);
/// Small random Weyl element on variables lo..hi with total degree <= max_degree.
WeylElement random_weyl(Rng& rng, std::int64_t lo, std::int64_t hi, std::uint32_t max_degree,
                        std::size_t terms);

} // namespace lvf
