#include "lvf/cuntz.hpp"

#include <algorithm>

#include "lvf/errors.hpp"
#include "scanner.hpp"

namespace lvf {

using detail::Scanner;

std::string CuntzWord::to_string() const {
  if (is_unit()) return "1";
  std::string l, r;
  for (auto j : left) l += "s[" + std::to_string(j) + "]";
  for (auto it = right.rbegin(); it != right.rend(); ++it) r += "s*[" + std::to_string(*it) + "]";
  if (l.empty()) return r;
  if (r.empty()) return l;
  return l + " " + r;
}

std::optional<CuntzWord> multiply_words(const CuntzWord& a, const CuntzWord& b) {
  const std::size_t k = std::min(a.right.size(), b.left.size());
  for (std::size_t i = 0; i < k; ++i)
    if (a.right[i] != b.left[i]) return std::nullopt;
  CuntzWord out;
  if (a.right.size() <= b.left.size()) {
    out.left = a.left;
    out.left.insert(out.left.end(), b.left.begin() + static_cast<std::ptrdiff_t>(k), b.left.end());
    out.right = b.right;
  } else {
    out.left = a.left;
    out.right = b.right;
    out.right.insert(out.right.end(), a.right.begin() + static_cast<std::ptrdiff_t>(k),
                     a.right.end());
  }
  return out;
}

CuntzElement CuntzElement::constant(const GScalar& c) { return word({}, c); }
CuntzElement CuntzElement::s(std::int64_t j) { return word({{j}, {}}); }
CuntzElement CuntzElement::s_star(std::int64_t j) { return word({{}, {j}}); }

CuntzElement CuntzElement::word(CuntzWord w, const GScalar& c) {
  CuntzElement e;
  e.add_term(w, c);
  return e;
}

GScalar CuntzElement::coefficient(const CuntzWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? GScalar() : it->second;
}

void CuntzElement::add_term(const CuntzWord& w, const GScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

CuntzElement CuntzElement::star() const {
  CuntzElement out;
  for (const auto& [w, c] : terms_) out.add_term({w.right, w.left}, c.conj());
  return out;
}

CuntzElement CuntzElement::operator-() const {
  CuntzElement out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

CuntzElement& CuntzElement::operator+=(const CuntzElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

CuntzElement& CuntzElement::operator-=(const CuntzElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

CuntzElement& CuntzElement::operator*=(const GScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

CuntzElement operator*(const CuntzElement& a, const CuntzElement& b) {
  CuntzElement out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      if (auto w = multiply_words(wa, wb)) out.add_term(*w, ca * cb);
    }
  }
  return out;
}

std::string CuntzElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c.is_one() && !w.is_unit()) {
      out += w.to_string();
    } else {
      out += "(" + c.to_string() + ")";
      if (!w.is_unit()) out += " " + w.to_string();
    }
  }
  return out;
}

CuntzElement CuntzElement::parse(std::string_view text) {
  Scanner sc(text);
  if (sc.done()) throw ParseError("empty Cuntz element");
  CuntzElement result;
  bool first = true;
  while (!sc.done()) {
    GScalar sign(1);
    if (sc.accept('-')) {
      sign = GScalar(-1);
    } else if (!first) {
      sc.expect('+');
    }
    first = false;
    CuntzElement term = constant(sign);
    bool any = false;
    if (sc.accept('(')) {
      term *= GScalar::parse(sc.until(')'));
      any = true;
    } else if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      term *= GScalar(Rational::parse(sc.number_literal()));
      any = true;
    }
    while (sc.peek() == 's') {
      sc.accept('s');
      const bool is_star = sc.accept('*');
      sc.expect('[');
      const std::int64_t j = HalfIndex::parse(sc.until(']')).to_integer();
      term = term * (is_star ? s_star(j) : s(j));
      any = true;
    }
    if (!any) sc.fail("expected a term");
    result += term;
  }
  return result;
}

CuntzElement reduce(const std::vector<SignedGenerator>& sequence) {
  CuntzElement out = CuntzElement::constant(GScalar(1));
  for (const auto& g : sequence) {
    out = out * (g.star ? CuntzElement::s_star(g.index) : CuntzElement::s(g.index));
  }
  return out;
}

CuntzElement cuntz_D(const PairingMatrix& a, const PairingMatrix& l) {
  CuntzElement out;
  const PairingMatrix la = compose(l, a);
  for (const auto& [key, c] : la.entries()) {
    out.add_term({{key.first.to_integer()}, {key.second.to_integer()}}, c);
  }
  return out;
}

CuntzElement cuntz_del(const VectorCoeffs& h, const PairingMatrix& l) {
  CuntzElement out;
  const VectorCoeffs lh = apply(l, h);
  for (const auto& [i, c] : lh.entries()) out.add_term({{}, {i.to_integer()}}, c);
  return out;
}

CuntzElement cuntz_delbar(const VectorCoeffs& f) {
  CuntzElement out;
  for (const auto& [i, c] : f.entries()) out.add_term({{i.to_integer()}, {}}, c);
  return out;
}

namespace {

CheckResult compare_cuntz(std::string name, const CuntzElement& lhs, const CuntzElement& rhs,
                          const std::string& window) {
  CheckResult r = make_check(std::move(name), lhs == rhs, window, window);
  if (!r.passed()) {
    const CuntzElement diff = lhs - rhs;
    const auto& [w, c] = *diff.terms().begin();
    r.witness = CuntzElement::word(w, c).to_string();
  }
  return r;
}

GScalar pair(const VectorCoeffs& a, const VectorCoeffs& b) {
  GScalar s;
  for (const auto& [i, c] : a.entries()) s += c * b[i];
  return s;
}

} // namespace

std::vector<CheckResult> verify_cuntz_relations(const PairingMatrix& a, const PairingMatrix& b,
                                                const PairingMatrix& l, const VectorCoeffs& h,
                                                const VectorCoeffs& f, const VectorCoeffs& g) {
  const std::string w = a.window().to_string();
  const PairingMatrix la = compose(l, a);
  std::vector<CheckResult> out;
  out.push_back(compare_cuntz("cuntz_relation_1 D(A)D(B) = D(BLA)", cuntz_D(a, l) * cuntz_D(b, l),
                              cuntz_D(compose(b, la), l), w));
  out.push_back(compare_cuntz("cuntz_relation_2 del(h)D(A) = del(ALh)",
                              cuntz_del(h, l) * cuntz_D(a, l),
                              cuntz_del(apply(compose(a, l), h), l), w));
  out.push_back(compare_cuntz("cuntz_relation_3 D(A)delbar(f) = delbar(A*L*f)",
                              cuntz_D(a, l) * cuntz_delbar(f),
                              cuntz_delbar(apply_adjoint(a, apply_adjoint(l, f))), w));
  out.push_back(compare_cuntz("cuntz_relation_4 del(h)delbar(g) = <Lh,g>",
                              cuntz_del(h, l) * cuntz_delbar(g),
                              CuntzElement::constant(pair(apply(l, h), g)), w));
  return out;
}

AlgebraModel::Vector operator+(const AlgebraModel::Vector& a, const AlgebraModel::Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("algebra vectors of different length");
  AlgebraModel::Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

AlgebraModel::Vector scale(const AlgebraModel::Vector& a, const GScalar& c) {
  AlgebraModel::Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
  return out;
}

AlgebraModel::AlgebraModel(std::vector<std::vector<Vector>> products, Vector rho)
    : products_(std::move(products)), rho_(std::move(rho)) {
  const std::size_t n = products_.size();
  if (n == 0) throw InvalidArgument("algebra model needs a positive dimension");
  if (rho_.size() != n) throw DimensionMismatch("rho has the wrong length");
  for (const auto& row : products_) {
    if (row.size() != n) throw DimensionMismatch("multiplication table is not square");
    for (const auto& v : row)
      if (v.size() != n) throw DimensionMismatch("product vector has the wrong length");
  }
}

AlgebraModel AlgebraModel::matrix_algebra(std::size_t k, const Vector& rho) {
  const std::size_t n = k * k;
  std::vector<std::vector<Vector>> products(n, std::vector<Vector>(n, Vector(n)));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t d = 0; d < k; ++d) products[a * k + b][b * k + d][a * k + d] = GScalar(1);
  return {std::move(products), rho};
}

AlgebraModel::Vector AlgebraModel::matrix_element(const ExactMatrix& m) {
  Vector out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

IndexWindow AlgebraModel::window() const {
  return IndexWindow::integral(0, static_cast<std::int64_t>(dimension()) - 1);
}

AlgebraModel::Vector AlgebraModel::multiply(const Vector& a, const Vector& b) const {
  const std::size_t n = dimension();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      const GScalar c = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!products_[i][j][k].is_zero()) out[k] += c * products_[i][j][k];
    }
  }
  return out;
}

AlgebraModel::Vector AlgebraModel::homotope_product(const Vector& a, const Vector& b) const {
  return multiply(multiply(a, rho_), b);
}

std::optional<AlgebraModel::Vector> AlgebraModel::homotope_identity() const {
  // Unknowns e_0..e_{n-1} plus a trailing slot for the right-hand side.
  const std::size_t n = dimension();
  ExactMatrix sys(2 * n * n, n + 1);
  for (std::size_t a = 0; a < n; ++a) {
    Vector ea(n);
    ea[a] = GScalar(1);
    for (std::size_t i = 0; i < n; ++i) {
      Vector ei(n);
      ei[i] = GScalar(1);
      const Vector left = homotope_product(ei, ea);
      const Vector right = homotope_product(ea, ei);
      for (std::size_t k = 0; k < n; ++k) {
        sys(a * n + k, i) = left[k];
        sys(n * n + a * n + k, i) = right[k];
      }
    }
    sys(a * n + a, n) = GScalar(-1);
    sys(n * n + a * n + a, n) = GScalar(-1);
  }
  for (const auto& v : sys.nullspace()) {
    if (v[n].is_zero()) continue;
    const GScalar inv = v[n].inverse();
    Vector e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = v[i] * inv;
    return e;
  }
  return std::nullopt;
}

PairingMatrix AlgebraModel::left_multiplication(const Vector& a) const {
  const std::size_t n = dimension();
  ExactMatrix m(n, n);
  for (std::size_t alpha = 0; alpha < n; ++alpha) {
    Vector e(n);
    e[alpha] = GScalar(1);
    const Vector img = multiply(a, e);
    for (std::size_t beta = 0; beta < n; ++beta) m(alpha, beta) = img[beta];
  }
  return PairingMatrix::from_exact(window(), m);
}

VectorCoeffs AlgebraModel::coeffs(const Vector& a) const {
  VectorCoeffs v(window());
  for (std::size_t i = 0; i < a.size(); ++i) v.set(static_cast<std::int64_t>(i), a[i]);
  return v;
}

CuntzElement homotope_embed(const AlgebraModel& x, const AlgebraModel::Vector& a) {
  return cuntz_D(x.left_multiplication(a), x.left_multiplication(x.rho()));
}

std::vector<CheckResult> verify_homotope_relations(const AlgebraModel& x,
                                                   const AlgebraModel::Vector& a,
                                                   const AlgebraModel::Vector& b,
                                                   const AlgebraModel::Vector& h,
                                                   const VectorCoeffs& f, const VectorCoeffs& g) {
  const std::string w = x.window().to_string();
  const PairingMatrix lr = x.left_multiplication(x.rho());
  const PairingMatrix la = x.left_multiplication(a);
  const CuntzElement da = homotope_embed(x, a);
  const CuntzElement dh = cuntz_del(x.coeffs(h), lr);
  std::vector<CheckResult> out;
  out.push_back(compare_cuntz("homotope_relation_1 D(l_a)D(l_b) = D(l_{b rho a})",
                              da * homotope_embed(x, b),
                              homotope_embed(x, x.homotope_product(b, a)), w));
  out.push_back(compare_cuntz("homotope_relation_2 del(h)D(l_a) = del(a rho h)", dh * da,
                              cuntz_del(x.coeffs(x.homotope_product(a, h)), lr), w));
  out.push_back(compare_cuntz("homotope_relation_3 D(l_a)delbar(f) = delbar(l_a* l_rho* f)",
                              da * cuntz_delbar(f),
                              cuntz_delbar(apply_adjoint(la, apply_adjoint(lr, f))), w));
  out.push_back(compare_cuntz("homotope_relation_4 del(h)delbar(g) = <g, rho h>",
                              dh * cuntz_delbar(g),
                              CuntzElement::constant(pair(x.coeffs(x.multiply(x.rho(), h)), g)), w));
  return out;
}

CheckResult q_commutator_check(const AlgebraModel& x, const AlgebraModel::Vector& a,
                               const AlgebraModel::Vector& b, const GScalar& q) {
  const CuntzElement da = homotope_embed(x, a), db = homotope_embed(x, b);
  const CuntzElement lhs = da * db - q * (db * da);
  const AlgebraModel::Vector c = x.homotope_product(b, a) + scale(x.homotope_product(a, b), -q);
  return compare_cuntz("q_commutator q=" + q.to_string(), lhs, homotope_embed(x, c),
                       x.window().to_string());
}

InjectivityResult injectivity_check(const AlgebraModel& x) {
  const std::size_t n = x.dimension();
  std::vector<CuntzElement> images;
  std::map<CuntzWord, std::size_t> rows;
  for (std::size_t i = 0; i < n; ++i) {
    AlgebraModel::Vector e(n);
    e[i] = GScalar(1);
    images.push_back(homotope_embed(x, e));
    for (const auto& [w, c] : images.back().terms()) rows.emplace(w, rows.size());
  }
  ExactMatrix sys(rows.size(), n);
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [w, c] : images[j].terms()) sys(rows.at(w), j) = c;

  InjectivityResult r;
  r.has_homotope_identity = x.homotope_identity().has_value();
  r.kernel = sys.nullspace();
  const bool ok = !r.has_homotope_identity || r.kernel.empty();
  r.check = make_check("homotope_injective", ok, x.window().to_string());
  r.check.reason = std::string(r.has_homotope_identity ? "homotope identity present"
                                                       : "no homotope identity") +
                   ", kernel dimension " + std::to_string(r.kernel.size());
  if (!r.kernel.empty()) {
    std::string wit;
    for (const auto& v : r.kernel) {
      wit += wit.empty() ? "[" : " [";
      for (std::size_t i = 0; i < v.size(); ++i) wit += (i ? ", " : "") + v[i].to_string();
      wit += "]";
    }
    r.check.witness = wit;
  }
  return r;
}

} // namespace lvf
