#include "lvf/compute.hpp"

#include <sstream>

#include "lvf/cuntz.hpp"
#include "lvf/errors.hpp"
#include "lvf/jsmap.hpp"
#include "lvf/liealg.hpp"
#include "lvf/pairing.hpp"
#include "lvf/rng.hpp"
#include "scanner.hpp"

namespace lvf {

namespace {

using detail::Scanner;

const IndexWindow kExpressionWindow = IndexWindow::integral(0, 99);

GScalar coefficient(Scanner& sc) {
  if (sc.accept('(')) return GScalar::parse(sc.until(')'));
  if (std::isdigit(static_cast<unsigned char>(sc.peek()))) return GScalar(Rational::parse(sc.number_literal()));
  return GScalar(1);
}

// Index pair "12" (single digits) or "[i,j]".
std::pair<std::int64_t, std::int64_t> unit_indices(Scanner& sc) {
  if (sc.accept('[')) {
    const std::int64_t i = sc.integer();
    sc.expect(',');
    const std::int64_t j = sc.integer();
    sc.expect(']');
    return {i, j};
  }
  const std::string_view digits = sc.number_literal();
  if (digits.size() != 2 || digits.find('/') != std::string_view::npos) sc.fail("expected two digits or [i,j]");
  return {digits[0] - '0', digits[1] - '0'};
}

template <typename T, typename Atom>
T signed_sum(Scanner& sc, Atom atom) {
  T acc = atom(sc).scaled(GScalar(1));
  while (true) {
    if (sc.accept('+')) {
      acc = acc + atom(sc);
    } else if (sc.accept('-')) {
      acc = acc + atom(sc).scaled(GScalar(-1));
    } else {
      return acc;
    }
  }
}

PairingMatrix matrix_atom(Scanner& sc) {
  bool negate = sc.accept('-');
  const GScalar c = coefficient(sc);
  PairingMatrix m = PairingMatrix::zero(kExpressionWindow);
  if (sc.accept('E')) {
    const auto [i, j] = unit_indices(sc);
    m = PairingMatrix::unit(kExpressionWindow, i, j);
  } else if (sc.accept('I')) {
    const std::int64_t n = sc.integer();
    for (std::int64_t i = 1; i <= n; ++i) m = m + PairingMatrix::unit(kExpressionWindow, i, i);
  } else {
    sc.fail("expected E or I");
  }
  return m.scaled(negate ? -c : c);
}

VectorCoeffs vector_atom(Scanner& sc) {
  bool negate = sc.accept('-');
  const GScalar c = coefficient(sc);
  if (!sc.accept('e')) sc.fail("expected e");
  std::int64_t i = 0;
  if (sc.accept('[')) {
    i = sc.integer();
    sc.expect(']');
  } else {
    i = sc.integer();
  }
  return VectorCoeffs::unit(kExpressionWindow, i).scaled(negate ? -c : c);
}

PairingMatrix parse_matrix(Scanner& sc) { return signed_sum<PairingMatrix>(sc, matrix_atom); }
VectorCoeffs parse_vector(Scanner& sc) { return signed_sum<VectorCoeffs>(sc, vector_atom); }

WeylElement parse_expr(Scanner& sc);

WeylElement parse_factor(Scanner& sc) {
  if (sc.accept('[')) {
    const WeylElement a = parse_expr(sc);
    sc.expect(',');
    const WeylElement b = parse_expr(sc);
    sc.expect(']');
    return commutator(a, b);
  }
  if (sc.accept_word("eps(")) {
    const PairingMatrix a = parse_matrix(sc);
    sc.expect(',');
    const PairingMatrix b = parse_matrix(sc);
    sc.expect(')');
    return epsilon(a, b);
  }
  if (sc.accept_word("delbar(")) {
    const VectorCoeffs r = parse_vector(sc);
    sc.expect(')');
    return delbar(r);
  }
  if (sc.accept_word("del(")) {
    const VectorCoeffs h = parse_vector(sc);
    sc.expect(')');
    return del(h);
  }
  if (sc.accept_word("D(")) {
    const PairingMatrix a = parse_matrix(sc);
    sc.expect(')');
    return D(a);
  }
  sc.fail("expected D(, del(, delbar(, eps( or [");
}

WeylElement parse_term(Scanner& sc) {
  const GScalar c = coefficient(sc);
  WeylElement f = parse_factor(sc);
  while (sc.peek() == '[' || sc.peek() == 'D' || sc.peek() == 'd' || sc.peek() == 'e') {
    f = f * parse_factor(sc);
  }
  return c * f;
}

WeylElement parse_expr(Scanner& sc) {
  WeylElement acc = sc.accept('-') ? -parse_term(sc) : parse_term(sc);
  while (true) {
    if (sc.accept('+')) {
      acc += parse_term(sc);
    } else if (sc.accept('-')) {
      acc -= parse_term(sc);
    } else {
      return acc;
    }
  }
}

bool is_operator_expression(const std::string& expr) {
  for (const char* key : {"D(", "del(", "delbar(", "eps("})
    if (expr.find(key) != std::string::npos) return true;
  return false;
}

std::string d_matrix(const ComputeOptions& o) {
  const std::int64_t n = o.window.value_or(4);
  if (n < 1) throw InvalidArgument("window must be positive");
  if (o.basis == "x2dx") return x2dx_matrix(IndexWindow::integral(1, n)).to_table();
  if (o.basis == "sine") {
    const IndexWindow w = IndexWindow::integral(1, n);
    VectorCoeffs c(w);
    for (std::size_t i = 0; i < o.c.size() && static_cast<std::int64_t>(i) < n; ++i)
      c.set(static_cast<std::int64_t>(i) + 1, o.c[i]);
    return sine_operator_matrix(o.lambda, c, w).to_table();
  }
  if (o.basis == "monomial") return monomial_field_matrix(o.n, IndexWindow::integral(-n, n)).to_table();
  if (o.basis == "circle") return circle_field_matrix(o.n, IndexWindow::integral(-n, n)).to_table();
  if (o.basis == "sv") {
    bool half = false;
    if (o.s == Rational(1, 2)) {
      half = true;
    } else if (!o.s.is_zero()) {
      throw InvalidArgument("s must be 0 or 1/2");
    }
    const IndexWindow w = half ? IndexWindow(HalfIndex::from_doubled(1 - 2 * n), HalfIndex::from_doubled(2 * n - 1))
                               : IndexWindow::integral(-n, n);
    return sv_action_matrix(o.n, o.rho, half, w).to_table();
  }
  if (o.basis == "map") {
    if (o.h.empty()) throw InvalidArgument("basis map needs --h");
    return map_induced_matrix(o.h).to_table();
  }
  throw InvalidArgument("unknown basis '" + o.basis + "'");
}

std::string cocycle_text(const ComputeOptions& o) {
  std::optional<StructureConstants> l;
  if (o.algebra == "sl2") {
    l = sl2();
  } else if (o.algebra == "abelian3") {
    l = abelian(3);
  } else if (o.algebra == "solvable4") {
    Rng rng(o.seed);
    l = random_solvable4(rng);
  } else {
    throw InvalidArgument("unknown algebra '" + o.algebra + "'");
  }
  if (o.degree < 1 || o.degree > 3) throw InvalidArgument("degree must lie in [1, 3]");
  std::optional<std::size_t> u;
  for (std::size_t i = 0; i < l->dimension(); ++i)
    if (l->basis()[i].to_string() == o.u) u = i;
  if (!u) throw InvalidArgument("unknown basis element '" + o.u + "'");
  const ExactMatrix t = cocycle_table(*l, basis_vector(*u), adjoint_weight(*l, o.degree));
  std::ostringstream os;
  os << "phi_" << o.u;
  for (const Label& c : l->basis()) os << '\t' << c.to_string();
  os << '\n';
  for (std::size_t r = 0; r < t.rows(); ++r) {
    os << l->basis()[r].to_string();
    for (std::size_t c = 0; c < t.cols(); ++c) os << '\t' << t(r, c).to_string();
    os << '\n';
  }
  return os.str();
}

} // namespace

const std::vector<std::string>& compute_targets() {
  static const std::vector<std::string> t = {"d-matrix", "weyl-element", "cuntz-element", "cocycle-table"};
  return t;
}

std::string evaluate_weyl_expression(const std::string& expr) {
  if (!is_operator_expression(expr)) {
    return WeylElement::parse(expr).to_string();
  }
  Scanner sc(expr);
  const WeylElement w = parse_expr(sc);
  if (!sc.done()) sc.fail("trailing input");
  return w.to_string();
}

std::string compute(const std::string& what, const ComputeOptions& opts) {
  if (what == "d-matrix") return d_matrix(opts);
  if (what == "weyl-element") {
    if (opts.op.empty()) throw InvalidArgument("weyl-element needs --op");
    return evaluate_weyl_expression(opts.op) + "\n";
  }
  if (what == "cuntz-element") {
    if (opts.op.empty()) throw InvalidArgument("cuntz-element needs --op");
    return CuntzElement::parse(opts.op).to_string() + "\n";
  }
  if (what == "cocycle-table") return cocycle_text(opts);
  throw InvalidArgument("unknown compute target '" + what + "'");
}

} // namespace lvf
