#include "singspec/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace singspec {

std::size_t rank(RationalMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(r, k), m(pivot, k));
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      const Rational factor = m(i, c) / m(r, c);
      for (std::size_t k = c; k < cols; ++k) m(i, k) -= factor * m(r, k);
    }
    ++r;
  }
  return r;
}

std::vector<Rational> leading_pivots(RationalMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("leading_pivots: matrix is not square");
  const std::size_t n = m.rows();
  std::vector<Rational> pivots;
  pivots.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      pivots.push_back(0);
      return pivots;
    }
    pivots.push_back(m(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Rational factor = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= factor * m(k, j);
    }
  }
  return pivots;
}

bool is_negative_definite(const RationalMatrix& m) {
  const auto pivots = leading_pivots(m);
  if (pivots.size() != m.rows()) return false;
  for (const auto& p : pivots) {
    if (p >= 0) return false;
  }
  return true;
}

}  // namespace singspec
