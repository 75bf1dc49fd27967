#include "lvf/liealg.hpp"

#include "lvf/errors.hpp"

namespace lvf {

namespace {

HalfIndex half(const Rational& s) { return HalfIndex::from_doubled(s.is_zero() ? 0 : 1); }

bool is_half_shift(const Rational& s) {
  if (s == Rational(0)) return false;
  if (s == Rational(1, 2)) return true;
  throw InvalidArgument("shift s must be 0 or 1/2, got " + s.to_string());
}

void add_sort(std::vector<Label>& out, const std::string& sort, const IndexWindow& w) {
  for (HalfIndex i : w.indices()) out.push_back({sort, i});
}

// Sets [a, b] = c * target if target exists, otherwise marks the pair undefined.
void set_or_undefined(StructureConstants& l, std::size_t a, std::size_t b, const GScalar& c,
                      const Label& target) {
  auto t = l.find(target);
  if (!t) {
    if (c.is_zero()) {
      l.set_bracket(a, b, {});
    } else {
      l.mark_undefined(a, b);
    }
    return;
  }
  l.set_bracket(a, b, {{*t, c}});
}

// Witt-type bracket [X_m, X_n] = (n - m) X_{m+n} and module action
// [X_m, Y_p] = (p - m rho) Y_{m+p} on an already labelled basis.
StructureConstants semidirect(const std::string& lsort, const IndexWindow& lw,
                              const std::string& ysort, const IndexWindow& yw, const Rational& rho) {
  std::vector<Label> labels;
  add_sort(labels, lsort, lw);
  add_sort(labels, ysort, yw);
  StructureConstants l(labels);
  for (HalfIndex m : lw.indices()) {
    for (HalfIndex n : lw.indices()) {
      if (!(m < n)) continue;
      const Rational c(n.to_integer() - m.to_integer());
      set_or_undefined(l, l.at({lsort, m}), l.at({lsort, n}), c, {lsort, m + n});
    }
    for (HalfIndex p : yw.indices()) {
      const Rational c = Rational(p.doubled(), 2) - Rational(m.to_integer()) * rho;
      set_or_undefined(l, l.at({lsort, m}), l.at({ysort, p}), c, {ysort, m + p});
    }
  }
  return l;
}

} // namespace

AlgebraFamily::Kind AlgebraFamily::parse_kind(const std::string& name) {
  if (name == "witt") return Kind::witt;
  if (name == "heisenberg_virasoro" || name == "heisenberg-virasoro") return Kind::heisenberg_virasoro;
  if (name == "schrodinger_virasoro" || name == "schrodinger-virasoro")
    return Kind::schrodinger_virasoro;
  if (name == "finite_custom") return Kind::finite_custom;
  throw InvalidArgument("unknown algebra family " + name);
}

IndexWindow AlgebraFamily::second_window() const {
  if (module_window) return *module_window;
  if (kind == Kind::schrodinger_virasoro && is_half_shift(s)) {
    if (window.size() < 2) throw InvalidArgument("window too small for a half-integer module");
    return {window.lo() + half(s), window.hi() - half(s)};
  }
  return window;
}

StructureConstants build_family(const AlgebraFamily& spec) {
  if (spec.window.half_shift()) throw InvalidArgument("the L sort is indexed by integers");
  switch (spec.kind) {
    case AlgebraFamily::Kind::witt: {
      std::vector<Label> labels;
      add_sort(labels, "L", spec.window);
      StructureConstants l(labels);
      for (HalfIndex m : spec.window.indices())
        for (HalfIndex n : spec.window.indices())
          if (m < n)
            set_or_undefined(l, l.at({"L", m}), l.at({"L", n}),
                             Rational(n.to_integer() - m.to_integer()), {"L", m + n});
      return l;
    }
    case AlgebraFamily::Kind::heisenberg_virasoro: {
      const IndexWindow mw = spec.second_window();
      if (mw.half_shift()) throw InvalidArgument("the del sort is indexed by integers");
      return semidirect("d", spec.window, "del", mw, Rational(0));
    }
    case AlgebraFamily::Kind::schrodinger_virasoro: {
      const bool shifted = is_half_shift(spec.s);
      const IndexWindow yw = spec.second_window();
      if (yw.half_shift() != shifted) {
        throw InvalidArgument("module window " + yw.to_string() + " does not match s = " +
                              spec.s.to_string());
      }
      return semidirect("L", spec.window, "Y", yw, spec.rho);
    }
    case AlgebraFamily::Kind::finite_custom:
      if (!spec.custom) throw InvalidArgument("finite_custom family needs structure constants");
      return *spec.custom;
  }
  throw InvalidArgument("unknown algebra family");
}

StructureConstants sl2() {
  StructureConstants l({{"h", {}}, {"e", {}}, {"f", {}}});
  l.set_bracket(0, 1, {{1, GScalar(2)}});
  l.set_bracket(0, 2, {{2, GScalar(-2)}});
  l.set_bracket(1, 2, {{0, GScalar(1)}});
  return l;
}

StructureConstants abelian(std::size_t n) {
  std::vector<Label> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back({"a", HalfIndex(static_cast<std::int64_t>(i))});
  return StructureConstants(labels);
}

StructureConstants random_solvable4(Rng& rng) {
  StructureConstants l({{"e0", {}}, {"x", {}}, {"y", {}}, {"z", {}}});
  const Rational n00 = rng.rational(), n01 = rng.rational(), n10 = rng.rational(),
                 n11 = rng.rational();
  l.set_bracket(0, 1, {{1, n00}, {2, n10}});
  l.set_bracket(0, 2, {{1, n01}, {2, n11}});
  l.set_bracket(0, 3, {{3, n00 + n11}});
  l.set_bracket(1, 2, {{3, GScalar(1)}});
  return l;
}

std::vector<CheckResult> verify_realization(const StructureConstants& l, const Realization& r,
                                            const RealizationBands& bands, const JSContext& ctx) {
  Bandwidth widest = 0;
  for (const auto& label : l.basis()) {
    if (!r.count(label)) throw InvalidArgument("realization misses " + label.to_string());
    auto b = bands.find(label);
    if (b == bands.end()) throw InvalidArgument("no bandwidth for " + label.to_string());
    if (!b->second) {
      widest = std::nullopt;
    } else if (widest) {
      widest = std::max(*widest, *b->second);
    }
  }
  const IndexWindow s = safe_window(ctx, {widest, widest});

  struct Tally {
    std::size_t checked = 0;
    std::size_t skipped = 0;
    std::optional<std::string> witness;
  };
  std::map<std::pair<std::string, std::string>, Tally> tallies;
  const std::size_t n = l.dimension();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      const Label& la = l.basis()[a];
      const Label& lb = l.basis()[b];
      Tally& t = tallies[{la.sort, lb.sort}];
      auto br = l.bracket(a, b);
      if (!br) {
        ++t.skipped;
        continue;
      }
      ++t.checked;
      const WeylElement lhs = restrict_to(commutator(r.at(la), r.at(lb)), s);
      WeylElement rhs;
      for (const auto& [k, c] : *br) rhs += c * r.at(l.basis()[k]);
      rhs = restrict_to(rhs, s);
      if (lhs != rhs && !t.witness) {
        const WeylElement diff = lhs - rhs;
        const auto& [m, c] = *diff.terms().begin();
        t.witness = "[" + la.to_string() + ", " + lb.to_string() +
                    "]: " + WeylElement::monomial(m, c).to_string();
      }
    }
  }
  std::vector<CheckResult> out;
  for (const auto& [sorts, t] : tallies) {
    CheckResult c = make_check("bracket [" + sorts.first + "," + sorts.second + "]", !t.witness,
                               ctx.window.to_string(), s.to_string());
    c.witness = t.witness;
    c.reason = "checked " + std::to_string(t.checked) + " pairs, skipped " +
               std::to_string(t.skipped) + " leaving the label window";
    out.push_back(std::move(c));
  }
  return out;
}

RealizationData heisenberg_virasoro_realization(const IndexWindow& labels, const IndexWindow& space) {
  AlgebraFamily f;
  f.kind = AlgebraFamily::Kind::heisenberg_virasoro;
  f.window = labels;
  RealizationData out{build_family(f), {}, {}};
  for (HalfIndex n : labels.indices()) {
    const std::int64_t k = n.to_integer();
    const Label d{"d", n};
    out.realization[d] = -D(monomial_field_matrix(k + 1, space));
    out.bands[d] = std::abs(k);
    const Label p{"del", n};
    out.realization[p] = del(VectorCoeffs::unit(space, n));
    out.bands[p] = 0;
  }
  return out;
}

RealizationData schrodinger_virasoro_realization(const Rational& rho, bool half_shift,
                                                 const IndexWindow& labels,
                                                 const IndexWindow& space) {
  AlgebraFamily f;
  f.kind = AlgebraFamily::Kind::schrodinger_virasoro;
  f.window = labels;
  f.s = half_shift ? Rational(1, 2) : Rational(0);
  f.rho = rho;
  RealizationData out{build_family(f), {}, {}};
  for (HalfIndex m : labels.indices()) {
    const Label l{"L", m};
    out.realization[l] = -D(sv_action_matrix(m.to_integer(), rho, half_shift, space));
    out.bands[l] = std::abs(m.to_integer());
  }
  for (HalfIndex p : f.second_window().indices()) {
    const Label y{"Y", p};
    out.realization[y] = del(VectorCoeffs::unit(space, p));
    out.bands[y] = 0;
  }
  return out;
}

RealizationData circle_witt_realization(const IndexWindow& labels, const IndexWindow& space) {
  AlgebraFamily f;
  f.kind = AlgebraFamily::Kind::heisenberg_virasoro;
  f.window = labels;
  RealizationData out{build_family(f).relabeled({{"d", "L"}}), {}, {}};
  for (HalfIndex m : labels.indices()) {
    const Label l{"L", m};
    out.realization[l] = GScalar::i() * D(circle_field_matrix(m.to_integer(), space));
    out.bands[l] = std::abs(m.to_integer());
    const Label p{"del", m};
    out.realization[p] = del(VectorCoeffs::unit(space, m));
    out.bands[p] = 0;
  }
  return out;
}

CheckResult dynamics_check(const std::vector<std::int64_t>& h, const VectorCoeffs& phi,
                           std::uint32_t n) {
  const auto size = static_cast<std::int64_t>(h.size());
  std::vector<std::int64_t> hn(h.size());
  for (std::int64_t l = 0; l < size; ++l) {
    std::int64_t v = l;
    for (std::uint32_t k = 0; k < n; ++k) v = h.at(static_cast<std::size_t>(v));
    hn[static_cast<std::size_t>(l)] = v;
  }
  const WeylElement lhs = del(apply(map_induced_matrix(hn), phi));
  const WeylElement da = D(map_induced_matrix(h));
  WeylElement rhs = del(phi);
  for (std::uint32_t k = 0; k < n; ++k) rhs = commutator(rhs, da);
  const std::string w = IndexWindow::integral(0, size - 1).to_string();
  return compare_weyl("dynamics n=" + std::to_string(n), lhs, rhs, w, w);
}

CheckResult cocycle_check(const StructureConstants& l, const ExactMatrix& phi) {
  const std::size_t n = l.dimension();
  if (phi.rows() != n || phi.cols() != n) throw DimensionMismatch("cocycle table size");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      if (!(phi(a, b) == -phi(b, a))) {
        CheckResult r = make_check("cocycle antisymmetry", false);
        r.witness = "(" + l.basis()[a].to_string() + ", " + l.basis()[b].to_string() + ")";
        return r;
      }
    }
  }
  auto form = [&](std::size_t a, const AlgebraVector& v) {
    GScalar s;
    for (const auto& [k, c] : v) s += phi(a, k) * c;
    return s;
  };
  std::size_t checked = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        auto bc = l.bracket(b, c), cb = l.bracket(c, a), ab = l.bracket(a, b);
        if (!bc || !cb || !ab) continue;
        ++checked;
        const GScalar total = form(a, *bc) + form(b, *cb) + form(c, *ab);
        if (!total.is_zero()) {
          CheckResult r = make_check("cocycle identity", false);
          r.witness = "(" + l.basis()[a].to_string() + ", " + l.basis()[b].to_string() + ", " +
                      l.basis()[c].to_string() + ") -> " + total.to_string();
          return r;
        }
      }
    }
  }
  CheckResult r = make_check("cocycle identity", true);
  r.reason = "checked " + std::to_string(checked) + " triples";
  return r;
}

StructureConstants extend_by_cocycle(const StructureConstants& l, const ExactMatrix& phi) {
  const CheckResult pre = cocycle_check(l, phi);
  if (!pre.passed()) throw CocycleFailure(pre.name + " fails at " + pre.witness.value_or("?"));
  std::vector<Label> labels = l.basis();
  labels.push_back({"c", {}});
  StructureConstants out(labels);
  const std::size_t n = l.dimension();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      auto br = l.bracket(a, b);
      if (!br) {
        out.mark_undefined(a, b);
        continue;
      }
      AlgebraVector v = *br;
      if (!phi(a, b).is_zero()) v[n] = phi(a, b);
      out.set_bracket(a, b, v);
    }
  }
  const CheckResult jac = out.jacobi_check();
  if (!jac.passed()) throw CocycleFailure("extension fails Jacobi at " + jac.witness.value_or("?"));
  return out;
}

} // namespace lvf
