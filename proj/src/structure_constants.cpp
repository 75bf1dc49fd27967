#include "lvf/structure_constants.hpp"

#include <sstream>

#include "lvf/errors.hpp"

namespace lvf {

std::string Label::to_string() const {
  return index ? sort + "[" + index->to_string() + "]" : sort;
}

void add_scaled(AlgebraVector& acc, const AlgebraVector& v, const GScalar& c) {
  if (c.is_zero()) return;
  for (const auto& [k, x] : v) {
    GScalar& slot = acc[k];
    slot += x * c;
    if (slot.is_zero()) acc.erase(k);
  }
}

AlgebraVector basis_vector(std::size_t i) { return {{i, GScalar(1)}}; }

std::vector<GScalar> to_dense(const AlgebraVector& v, std::size_t n) {
  std::vector<GScalar> out(n);
  for (const auto& [k, x] : v) out.at(k) = x;
  return out;
}

AlgebraVector from_dense(const std::vector<GScalar>& v) {
  AlgebraVector out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out[k] = v[k];
  return out;
}

StructureConstants::StructureConstants(std::vector<Label> basis) : basis_(std::move(basis)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (!positions_.emplace(basis_[i], i).second) {
      throw InvalidArgument("duplicate basis label " + basis_[i].to_string());
    }
  }
}

std::optional<std::size_t> StructureConstants::find(const Label& l) const {
  auto it = positions_.find(l);
  if (it == positions_.end()) return std::nullopt;
  return it->second;
}

std::size_t StructureConstants::at(const Label& l) const {
  auto p = find(l);
  if (!p) throw InvalidArgument("unknown label " + l.to_string());
  return *p;
}

void StructureConstants::set_bracket(std::size_t a, std::size_t b, const AlgebraVector& v) {
  if (a == b && !v.empty()) throw InvalidArgument("[x, x] must vanish");
  set_bracket_one_sided(a, b, v);
  AlgebraVector neg;
  add_scaled(neg, v, GScalar(-1));
  set_bracket_one_sided(b, a, neg);
}

void StructureConstants::set_bracket_one_sided(std::size_t a, std::size_t b, const AlgebraVector& v) {
  if (a >= dimension() || b >= dimension()) throw InvalidArgument("bracket position out of range");
  undefined_.erase({a, b});
  AlgebraVector clean;
  add_scaled(clean, v, GScalar(1));
  if (clean.empty()) {
    brackets_.erase({a, b});
  } else {
    brackets_[{a, b}] = std::move(clean);
  }
}

void StructureConstants::mark_undefined(std::size_t a, std::size_t b) {
  brackets_.erase({a, b});
  brackets_.erase({b, a});
  undefined_.insert({a, b});
  undefined_.insert({b, a});
}

std::optional<AlgebraVector> StructureConstants::bracket(std::size_t a, std::size_t b) const {
  if (undefined_.count({a, b})) return std::nullopt;
  auto it = brackets_.find({a, b});
  return it == brackets_.end() ? AlgebraVector{} : it->second;
}

std::optional<AlgebraVector> StructureConstants::bracket(const AlgebraVector& u,
                                                         const AlgebraVector& v) const {
  AlgebraVector out;
  for (const auto& [a, ca] : u) {
    for (const auto& [b, cb] : v) {
      auto br = bracket(a, b);
      if (!br) return std::nullopt;
      add_scaled(out, *br, ca * cb);
    }
  }
  return out;
}

bool StructureConstants::is_antisymmetric() const {
  for (std::size_t a = 0; a < dimension(); ++a) {
    for (std::size_t b = a; b < dimension(); ++b) {
      auto ab = bracket(a, b);
      auto ba = bracket(b, a);
      if (ab.has_value() != ba.has_value()) return false;
      if (!ab) continue;
      AlgebraVector sum = *ab;
      add_scaled(sum, *ba, GScalar(1));
      if (!sum.empty()) return false;
    }
  }
  return true;
}

CheckResult StructureConstants::jacobi_check() const {
  std::size_t checked = 0;
  std::size_t skipped = 0;
  const std::size_t n = dimension();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        const AlgebraVector ea = basis_vector(a), eb = basis_vector(b), ec = basis_vector(c);
        auto bc = bracket(b, c), ca = bracket(c, a), ab = bracket(a, b);
        if (!bc || !ca || !ab) {
          ++skipped;
          continue;
        }
        auto t1 = bracket(ea, *bc), t2 = bracket(eb, *ca), t3 = bracket(ec, *ab);
        if (!t1 || !t2 || !t3) {
          ++skipped;
          continue;
        }
        ++checked;
        AlgebraVector sum = *t1;
        add_scaled(sum, *t2, GScalar(1));
        add_scaled(sum, *t3, GScalar(1));
        if (!sum.empty()) {
          CheckResult r = make_check("jacobi", false);
          r.witness = "(" + basis_[a].to_string() + ", " + basis_[b].to_string() + ", " +
                      basis_[c].to_string() + ")";
          return r;
        }
      }
    }
  }
  CheckResult r = make_check("jacobi", true);
  r.reason = "checked " + std::to_string(checked) + " triples, skipped " + std::to_string(skipped) +
             " leaving the window";
  return r;
}

ExactMatrix StructureConstants::ad_matrix(const AlgebraVector& v) const {
  const std::size_t n = dimension();
  ExactMatrix m(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    auto br = bracket(v, basis_vector(a));
    if (!br) throw InvalidArgument("ad matrix needs all brackets with " + basis_[a].to_string());
    for (const auto& [b, c] : *br) m(a, b) = c;
  }
  return m;
}

std::vector<AlgebraVector> StructureConstants::center() const {
  // Unknown v = sum_k v_k e_k with [v, e_a] = 0 for all a: one equation per (a, output coordinate).
  const std::size_t n = dimension();
  ExactMatrix sys(n * n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      auto br = bracket(k, a);
      if (!br) throw InvalidArgument("center needs a fully defined bracket table");
      for (const auto& [out, c] : *br) sys(a * n + out, k) = c;
    }
  }
  std::vector<AlgebraVector> basis;
  for (const auto& v : sys.nullspace()) basis.push_back(from_dense(v));
  return basis;
}

StructureConstants StructureConstants::relabeled(const std::map<std::string, std::string>& sorts) const {
  std::vector<Label> labels = basis_;
  for (auto& l : labels) {
    auto it = sorts.find(l.sort);
    if (it != sorts.end()) l.sort = it->second;
  }
  StructureConstants out(std::move(labels));
  out.brackets_ = brackets_;
  out.undefined_ = undefined_;
  return out;
}

std::string StructureConstants::to_string() const {
  std::ostringstream os;
  for (const auto& [key, v] : brackets_) {
    if (key.first > key.second) continue;
    os << "[" << basis_[key.first].to_string() << ", " << basis_[key.second].to_string() << "] =";
    bool first = true;
    for (const auto& [k, c] : v) {
      os << (first ? " " : " + ") << "(" << c.to_string() << ") " << basis_[k].to_string();
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

} // namespace lvf
