#include "lvf/exact_matrix.hpp"

#include "lvf/errors.hpp"

namespace lvf {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = GScalar(1);
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
  ExactMatrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const GScalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        if (!o(k, c).is_zero()) out(r, c) += a * o(k, c);
      }
    }
  }
  return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  ExactMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const { return *this + o.scaled(GScalar(-1)); }

ExactMatrix ExactMatrix::scaled(const GScalar& c) const {
  ExactMatrix out = *this;
  for (auto& v : out.data_) v *= c;
  return out;
}

GScalar ExactMatrix::trace() const {
  GScalar t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

ExactMatrix ExactMatrix::rref(std::vector<std::size_t>& pivots) const {
  ExactMatrix m = *this;
  pivots.clear();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pivot = row;
    while (pivot < rows_ && m(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) continue;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(m(row, c), m(pivot, c));
    const GScalar inv = m(row, col).inverse();
    for (std::size_t c = col; c < cols_; ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const GScalar f = m(r, col);
      for (std::size_t c = col; c < cols_; ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return m;
}

std::size_t ExactMatrix::rank() const {
  std::vector<std::size_t> pivots;
  rref(pivots);
  return pivots.size();
}

std::vector<std::vector<GScalar>> ExactMatrix::nullspace() const {
  std::vector<std::size_t> pivots;
  const ExactMatrix m = rref(pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<GScalar>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<GScalar> v(cols_);
    v[free] = GScalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace lvf
