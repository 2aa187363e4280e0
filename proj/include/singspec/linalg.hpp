#ifndef SINGSPEC_LINALG_HPP
#define SINGSPEC_LINALG_HPP

#include <cstddef>
#include <vector>

#include "singspec/rational.hpp"

namespace singspec {

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank by exact Gaussian elimination with row pivoting.
std::size_t rank(RationalMatrix m);

/// Ratios det(A_k)/det(A_{k-1}) of consecutive leading principal minors of a
/// square matrix, from elimination without pivoting. Stops at the first zero
/// pivot, which is the last entry returned.
std::vector<Rational> leading_pivots(RationalMatrix m);

/// A symmetric matrix is negative definite iff every leading pivot is
/// negative (equivalently (-1)^k det(A_k) > 0 for all k).
bool is_negative_definite(const RationalMatrix& m);

}  // namespace singspec

#endif  // SINGSPEC_LINALG_HPP
