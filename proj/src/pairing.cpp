#include "lvf/pairing.hpp"

#include <algorithm>
#include <sstream>

#include "lvf/errors.hpp"

namespace lvf {

VectorCoeffs VectorCoeffs::unit(IndexWindow window, HalfIndex at) {
  VectorCoeffs v(window);
  v.set(at, GScalar(1));
  return v;
}

GScalar VectorCoeffs::operator[](HalfIndex i) const {
  auto it = entries_.find(i);
  return it == entries_.end() ? GScalar() : it->second;
}

void VectorCoeffs::set(HalfIndex i, const GScalar& c) {
  if (!window_.contains(i)) {
    throw InvalidArgument("index " + i.to_string() + " outside " + window_.to_string());
  }
  if (c.is_zero()) {
    entries_.erase(i);
  } else {
    entries_[i] = c;
  }
}

void VectorCoeffs::add(HalfIndex i, const GScalar& c) { set(i, (*this)[i] + c); }

VectorCoeffs& VectorCoeffs::operator+=(const VectorCoeffs& o) {
  if (!(o.window_ == window_)) throw DimensionMismatch("vector windows differ");
  for (const auto& [i, c] : o.entries_) add(i, c);
  return *this;
}

VectorCoeffs VectorCoeffs::scaled(const GScalar& c) const {
  VectorCoeffs out(window_);
  for (const auto& [i, v] : entries_) out.set(i, v * c);
  return out;
}

std::string bandwidth_to_string(const Bandwidth& b) {
  return b ? std::to_string(*b) : std::string("full");
}

Bandwidth add_bandwidths(const Bandwidth& a, const Bandwidth& b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

PairingMatrix::PairingMatrix(IndexWindow window, std::map<Key, GScalar> entries,
                             Bandwidth bandwidth, int pi_power)
    : window_(window), bandwidth_(bandwidth), pi_power_(pi_power) {
  if (pi_power != 0 && pi_power != 1) throw InvalidArgument("pi grade must be 0 or 1");
  if (bandwidth && *bandwidth < 0) throw InvalidArgument("negative bandwidth");
  for (auto& [key, c] : entries) {
    if (c.is_zero()) continue;
    if (!window.contains(key.first) || !window.contains(key.second)) {
      throw InvalidArgument("entry (" + key.first.to_string() + "," + key.second.to_string() +
                            ") outside window " + window.to_string());
    }
    if (bandwidth && index_distance(key.first, key.second) > *bandwidth) {
      throw InvalidArgument("entry (" + key.first.to_string() + "," + key.second.to_string() +
                            ") outside declared bandwidth " + std::to_string(*bandwidth));
    }
    entries_.emplace(key, std::move(c));
  }
}

PairingMatrix PairingMatrix::identity(IndexWindow window) {
  std::map<Key, GScalar> e;
  for (auto i : window.indices()) e[{i, i}] = GScalar(1);
  return {window, std::move(e), 0};
}

PairingMatrix PairingMatrix::unit(IndexWindow window, HalfIndex row, HalfIndex col,
                                  const GScalar& c) {
  return {window, {{{row, col}, c}}, index_distance(row, col)};
}

PairingMatrix PairingMatrix::from_exact(IndexWindow window, const ExactMatrix& m,
                                        Bandwidth bandwidth) {
  const auto n = static_cast<std::size_t>(window.size());
  if (m.rows() != n || m.cols() != n) throw DimensionMismatch("matrix does not match window size");
  std::map<Key, GScalar> e;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (!m(r, c).is_zero())
        e[{window.at(static_cast<std::int64_t>(r)), window.at(static_cast<std::int64_t>(c))}] = m(r, c);
  return {window, std::move(e), bandwidth};
}

GScalar PairingMatrix::entry(HalfIndex row, HalfIndex col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? GScalar() : it->second;
}

ExactMatrix PairingMatrix::to_exact() const {
  const auto n = static_cast<std::size_t>(window_.size());
  ExactMatrix m(n, n);
  for (const auto& [key, c] : entries_) {
    m(static_cast<std::size_t>(index_distance(key.first, window_.lo())),
      static_cast<std::size_t>(index_distance(key.second, window_.lo()))) = c;
  }
  return m;
}

PairingMatrix PairingMatrix::transpose() const {
  std::map<Key, GScalar> e;
  for (const auto& [key, c] : entries_) e[{key.second, key.first}] = c;
  return {window_, std::move(e), bandwidth_, pi_power_};
}

PairingMatrix PairingMatrix::scaled(const GScalar& c) const {
  std::map<Key, GScalar> e;
  for (const auto& [key, v] : entries_) e[key] = v * c;
  return {window_, std::move(e), bandwidth_, pi_power_};
}

PairingMatrix PairingMatrix::operator+(const PairingMatrix& o) const {
  if (!(window_ == o.window_)) throw DimensionMismatch("pairing windows differ");
  if (pi_power_ != o.pi_power_) throw InvalidArgument("cannot add entries of different pi grade");
  std::map<Key, GScalar> e = entries_;
  for (const auto& [key, v] : o.entries_) e[key] += v;
  Bandwidth b;
  if (bandwidth_ && o.bandwidth_) b = std::max(*bandwidth_, *o.bandwidth_);
  return {window_, std::move(e), b, pi_power_};
}

PairingMatrix PairingMatrix::operator-(const PairingMatrix& o) const {
  return *this + o.scaled(GScalar(-1));
}

PairingMatrix PairingMatrix::with_bandwidth(Bandwidth b) const {
  return {window_, entries_, b, pi_power_};
}

std::string PairingMatrix::to_table() const {
  auto cell = [&](const GScalar& v) -> std::string {
    if (v.is_zero()) return "0";
    if (pi_power_ == 0) return v.to_string();
    if (v == GScalar(1)) return "pi";
    if (v == GScalar(-1)) return "-pi";
    if (v.is_real()) return v.to_string() + "*pi";
    return "(" + v.to_string() + ")*pi";
  };
  const auto idx = window_.indices();
  std::vector<std::vector<std::string>> cells;
  std::size_t width = 1;
  for (auto r : idx) {
    std::vector<std::string> row;
    for (auto c : idx) {
      row.push_back(cell(entry(r, c)));
      width = std::max(width, row.back().size());
    }
    cells.push_back(std::move(row));
  }
  std::size_t label_width = 1;
  for (auto r : idx) label_width = std::max(label_width, r.to_string().size());

  std::ostringstream os;
  os << "# window " << window_.to_string() << " bandwidth " << bandwidth_to_string(bandwidth_)
     << (pi_power_ ? " scale pi" : "") << "\n";
  for (std::size_t r = 0; r < idx.size(); ++r) {
    std::string label = idx[r].to_string();
    os << std::string(label_width - label.size(), ' ') << label << " |";
    for (const auto& c : cells[r]) os << ' ' << std::string(width - c.size(), ' ') << c;
    os << "\n";
  }
  return os.str();
}

PairingMatrix compose(const PairingMatrix& outer, const PairingMatrix& inner) {
  if (!(outer.window() == inner.window())) throw DimensionMismatch("pairing windows differ");
  if (outer.pi_power() + inner.pi_power() > 1) {
    throw InvalidArgument("composition would produce pi^2 entries");
  }
  // <(outer o inner) e_a, f_c> = sum_b <inner e_a, f_b> <outer e_b, f_c>
  std::map<HalfIndex, std::vector<std::pair<HalfIndex, GScalar>>> outer_rows;
  for (const auto& [key, v] : outer.entries()) outer_rows[key.first].emplace_back(key.second, v);
  std::map<PairingMatrix::Key, GScalar> e;
  for (const auto& [key, v] : inner.entries()) {
    auto it = outer_rows.find(key.second);
    if (it == outer_rows.end()) continue;
    for (const auto& [c, w] : it->second) e[{key.first, c}] += v * w;
  }
  return {outer.window(), std::move(e), add_bandwidths(outer.bandwidth(), inner.bandwidth()),
          outer.pi_power() + inner.pi_power()};
}

PairingMatrix operator_commutator(const PairingMatrix& a, const PairingMatrix& b) {
  return compose(a, b) - compose(b, a);
}

VectorCoeffs apply(const PairingMatrix& a, const VectorCoeffs& h) {
  VectorCoeffs out(a.window());
  for (const auto& [key, v] : a.entries()) {
    const GScalar hv = h[key.first];
    if (!hv.is_zero()) out.add(key.second, hv * v);
  }
  return out;
}

VectorCoeffs apply_adjoint(const PairingMatrix& a, const VectorCoeffs& r) {
  VectorCoeffs out(a.window());
  for (const auto& [key, v] : a.entries()) {
    const GScalar rv = r[key.second];
    if (!rv.is_zero()) out.add(key.first, v * rv);
  }
  return out;
}

BasisSpec BasisSpec::parse_kind(const std::string& name) {
  BasisSpec b;
  if (name == "sine_0_2pi") {
    b.kind = Kind::sine_0_2pi;
  } else if (name == "laurent_monomial") {
    b.kind = Kind::laurent_monomial;
  } else if (name == "fourier_circle") {
    b.kind = Kind::fourier_circle;
  } else if (name == "standard_finite") {
    b.kind = Kind::standard_finite;
  } else if (name == "schrodinger_virasoro") {
    b.kind = Kind::schrodinger_virasoro;
  } else if (name == "custom_matrix") {
    b.kind = Kind::custom_matrix;
  } else {
    throw InvalidArgument("unknown basis kind '" + name + "'");
  }
  return b;
}

std::string BasisSpec::kind_name() const {
  switch (kind) {
    case Kind::sine_0_2pi: return "sine_0_2pi";
    case Kind::laurent_monomial: return "laurent_monomial";
    case Kind::fourier_circle: return "fourier_circle";
    case Kind::standard_finite: return "standard_finite";
    case Kind::schrodinger_virasoro: return "schrodinger_virasoro";
    case Kind::custom_matrix: return "custom_matrix";
  }
  return "?";
}

void BasisSpec::validate() const {
  if (kind == Kind::custom_matrix) {
    if (!custom) throw InvalidArgument("custom_matrix basis needs a matrix");
    if (custom->rows() != custom->cols()) throw InvalidArgument("custom matrix must be square");
  } else if (custom) {
    throw InvalidArgument("matrix given for non-custom basis " + kind_name());
  }
  if (kind != Kind::schrodinger_virasoro && (half_shift || !rho.is_zero())) {
    throw InvalidArgument("rho/s only apply to the schrodinger_virasoro basis");
  }
}

namespace {

void require_positive(const IndexWindow& w, const char* what) {
  if (w.half_shift() || w.lo() < HalfIndex(1)) {
    throw InvalidArgument(std::string(what) + " needs a window of positive integers");
  }
}

void require_integral(const IndexWindow& w, const char* what) {
  if (w.half_shift()) throw InvalidArgument(std::string(what) + " needs an integer window");
}

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

} // namespace

Rational sine_derivative_triple(std::int64_t n, std::int64_t m, std::int64_t k) {
  if (n < 1 || m < 1 || k < 1) throw InvalidArgument("sine triple indices must be positive");
  std::int64_t deltas = 0;
  if (n == k - m) ++deltas;
  if (n == k + m) ++deltas;
  if (n == m - k) --deltas;
  return Rational(m * deltas, 2);
}

PairingMatrix sine_operator_matrix(const Rational& lambda, const VectorCoeffs& c,
                                   IndexWindow window) {
  require_positive(window, "sine_operator_matrix");
  auto coeff = [&](std::int64_t j) -> GScalar {
    if (j <= 0) return GScalar();
    const HalfIndex h(j);
    return c.window().contains(h) ? c[h] : GScalar();
  };
  std::int64_t band = 0;
  for (const auto& [i, v] : c.entries()) {
    if (i.is_half()) throw InvalidArgument("sine coefficients must have integer indices");
    band = std::max(band, i.to_integer());
  }
  const Rational one_minus = Rational(1) - lambda;
  std::map<PairingMatrix::Key, GScalar> e;
  for (auto mi : window.indices()) {
    const std::int64_t m = mi.to_integer();
    for (auto ki : window.indices()) {
      const std::int64_t k = ki.to_integer();
      GScalar v = coeff(m + k) + coeff(k - m) - coeff(m - k);
      v *= GScalar(Rational(m, 2) * one_minus);
      if (m == k) v -= GScalar(lambda * Rational(m * m));
      if (!v.is_zero()) e[{mi, ki}] = v;
    }
  }
  return {window, std::move(e), band};
}

PairingMatrix x2dx_matrix(IndexWindow window) {
  require_positive(window, "x2dx_matrix");
  std::map<PairingMatrix::Key, GScalar> e;
  for (auto ni : window.indices()) {
    const std::int64_t n = ni.to_integer();
    for (auto mi : window.indices()) {
      const std::int64_t m = mi.to_integer();
      e[{ni, mi}] = n == m ? GScalar(-1) : GScalar(Rational(4 * n * m, n * n - m * m));
    }
  }
  return {window, std::move(e), std::nullopt, 1};
}

PairingMatrix monomial_field_matrix(std::int64_t n, IndexWindow window) {
  require_integral(window, "monomial_field_matrix");
  std::map<PairingMatrix::Key, GScalar> e;
  for (auto k : window.indices()) {
    const HalfIndex target = k + HalfIndex(n - 1);
    if (window.contains(target)) e[{k, target}] = GScalar(k.to_integer());
  }
  return {window, std::move(e), abs64(n - 1)};
}

PairingMatrix circle_field_matrix(std::int64_t n, IndexWindow window) {
  require_integral(window, "circle_field_matrix");
  std::map<PairingMatrix::Key, GScalar> e;
  for (auto k : window.indices()) {
    const HalfIndex target = k + HalfIndex(n);
    if (window.contains(target)) e[{k, target}] = GScalar(Rational(0), Rational(k.to_integer()));
  }
  return {window, std::move(e), abs64(n)};
}

PairingMatrix sv_action_matrix(std::int64_t m, const Rational& rho, bool half_shift,
                               IndexWindow window) {
  if (window.half_shift() != half_shift) {
    throw InvalidArgument("window " + window.to_string() + " does not have shift s = " +
                          (half_shift ? "1/2" : "0"));
  }
  std::map<PairingMatrix::Key, GScalar> e;
  for (auto p : window.indices()) {
    const HalfIndex target = p + HalfIndex(m);
    if (!window.contains(target)) continue;
    e[{p, target}] = GScalar(Rational(p.doubled(), 2) - Rational(m) * rho);
  }
  return {window, std::move(e), abs64(m)};
}

PairingMatrix map_induced_matrix(const std::vector<std::int64_t>& h) {
  if (h.empty()) throw InvalidArgument("map needs a nonempty domain");
  const auto n = static_cast<std::int64_t>(h.size());
  const auto window = IndexWindow::integral(0, n - 1);
  std::map<PairingMatrix::Key, GScalar> e;
  for (std::int64_t l = 0; l < n; ++l) {
    const std::int64_t k = h[static_cast<std::size_t>(l)];
    if (k < 0 || k >= n) throw InvalidArgument("map value out of range");
    e[{HalfIndex(k), HalfIndex(l)}] = GScalar(1);
  }
  return {window, std::move(e), std::nullopt};
}

} // namespace lvf
