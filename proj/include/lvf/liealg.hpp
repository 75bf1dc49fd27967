#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lvf/jsmap.hpp"
#include "lvf/rng.hpp"
#include "lvf/structure_constants.hpp"

namespace lvf {

struct AlgebraFamily {
  enum class Kind { witt, heisenberg_virasoro, schrodinger_virasoro, finite_custom };
  Kind kind = Kind::witt;
  /// Integer window of the L / d sort.
  IndexWindow window = IndexWindow::integral(-3, 3);
  /// Window of the second sort (del for heisenberg_virasoro, Y for schrodinger_virasoro).
  /// Defaults to `window`, shifted by 1/2 when s = 1/2.
  std::optional<IndexWindow> module_window;
  Rational s;
  Rational rho;
  std::optional<StructureConstants> custom;

  static Kind parse_kind(const std::string& name);
  IndexWindow second_window() const;
};

/// Throws InvalidArgument for s outside {0, 1/2} or a module window of the wrong parity.
StructureConstants build_family(const AlgebraFamily& spec);

StructureConstants sl2();
StructureConstants abelian(std::size_t n);
/// e0 acting by a random derivation on the Heisenberg algebra {x, y, z}, [x, y] = z.
StructureConstants random_solvable4(Rng& rng);

using Realization = std::map<Label, WeylElement>;
using RealizationBands = std::map<Label, Bandwidth>;

/// Exact bracket-by-bracket comparison of the realization with the structure constants,
/// one check per pair of sorts, restricted to the safe window. Each unordered pair is
/// checked in both orders.
std::vector<CheckResult> verify_realization(const StructureConstants& l, const Realization& r,
                                            const RealizationBands& bands, const JSContext& ctx);

struct RealizationData {
  StructureConstants algebra;
  Realization realization;
  RealizationBands bands;
};

/// d_n = D~_{n+1} = -D(x^{n+1} d/dx), del_m = del(e_m) on Laurent monomials in `space`.
RealizationData heisenberg_virasoro_realization(const IndexWindow& labels, const IndexWindow& space);
/// L_m = -D(A_m), Y_p = del(e_p) for the induced index action on Z + s.
RealizationData schrodinger_virasoro_realization(const Rational& rho, bool half_shift,
                                                 const IndexWindow& labels,
                                                 const IndexWindow& space);
/// L_m = i D(e^{im theta} d/d theta) on the Fourier basis.
RealizationData circle_witt_realization(const IndexWindow& labels, const IndexWindow& space);

/// del(S_n phi) = (-ad D(A))^n del(phi) with A phi = phi o h on {0..N-1}.
CheckResult dynamics_check(const std::vector<std::int64_t>& h, const VectorCoeffs& phi,
                           std::uint32_t n);

/// Antisymmetry plus the cyclic identity on every triple with defined brackets.
CheckResult cocycle_check(const StructureConstants& l, const ExactMatrix& phi);

/// g + R c with [x, y]' = [x, y] + phi(x, y) c. Throws CocycleFailure if phi is not a
/// 2-cocycle or the extension fails Jacobi.
StructureConstants extend_by_cocycle(const StructureConstants& l, const ExactMatrix& phi);

} // namespace lvf
