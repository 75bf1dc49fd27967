#pragma once

#include <cstddef>
#include <vector>

#include "lvf/gscalar.hpp"

namespace lvf {

/// Dense row-major matrix over Gaussian rationals, used for exact rank and kernel computations.
class ExactMatrix {
public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  GScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ExactMatrix transpose() const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix scaled(const GScalar& c) const;
  GScalar trace() const;
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

  std::size_t rank() const;
  /// Basis of {v : M v = 0}, one vector per free column of the reduced row echelon form.
  std::vector<std::vector<GScalar>> nullspace() const;

private:
  ExactMatrix rref(std::vector<std::size_t>& pivots) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GScalar> data_;
};

} // namespace lvf
