#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lvf/exact_matrix.hpp"
#include "lvf/gscalar.hpp"
#include "lvf/index.hpp"
#include "lvf/report.hpp"

namespace lvf {

/// Basis label: a sort name plus an optional index, e.g. "L[2]", "Y[1/2]", "h".
struct Label {
  std::string sort;
  std::optional<HalfIndex> index;

  std::string to_string() const;
  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;
};

/// Sparse vector over basis positions.
using AlgebraVector = std::map<std::size_t, GScalar>;

void add_scaled(AlgebraVector& acc, const AlgebraVector& v, const GScalar& c);

/// Lie algebra on a finite list of labels, given by its brackets of basis elements.
///
/// Brackets of basis pairs whose value would leave a truncated index window are marked
/// undefined and are excluded from every check instead of being truncated to zero.
class StructureConstants {
public:
  explicit StructureConstants(std::vector<Label> basis);

  const std::vector<Label>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  std::optional<std::size_t> find(const Label& l) const;
  std::size_t at(const Label& l) const;

  /// Sets [a, b] = v and [b, a] = -v.
  void set_bracket(std::size_t a, std::size_t b, const AlgebraVector& v);
  /// Sets only [a, b]; lets callers build deliberately broken tables.
  void set_bracket_one_sided(std::size_t a, std::size_t b, const AlgebraVector& v);
  void mark_undefined(std::size_t a, std::size_t b);

  /// nullopt when the bracket leaves the window.
  std::optional<AlgebraVector> bracket(std::size_t a, std::size_t b) const;
  std::optional<AlgebraVector> bracket(const AlgebraVector& u, const AlgebraVector& v) const;
  bool is_defined(std::size_t a, std::size_t b) const { return !undefined_.count({a, b}); }

  bool is_antisymmetric() const;
  /// Exact Jacobi identity on every triple whose nested brackets are all defined.
  CheckResult jacobi_check() const;
  /// Pairing matrix of ad(v) on positions 0..n-1: entry (a, b) = coefficient of e_b in [v, e_a].
  ExactMatrix ad_matrix(const AlgebraVector& v) const;
  /// Basis of the center, solved directly from the brackets.
  std::vector<AlgebraVector> center() const;

  /// Copy with sort names replaced according to `sorts`.
  StructureConstants relabeled(const std::map<std::string, std::string>& sorts) const;

  friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
    return a.basis_ == b.basis_ && a.brackets_ == b.brackets_ && a.undefined_ == b.undefined_;
  }

  std::string to_string() const;

private:
  std::vector<Label> basis_;
  std::map<Label, std::size_t> positions_;
  std::map<std::pair<std::size_t, std::size_t>, AlgebraVector> brackets_;
  std::set<std::pair<std::size_t, std::size_t>> undefined_;
};

AlgebraVector basis_vector(std::size_t i);
std::vector<GScalar> to_dense(const AlgebraVector& v, std::size_t n);
AlgebraVector from_dense(const std::vector<GScalar>& v);

} // namespace lvf
