#pragma once

#include "cptlab/matrix.hpp"

#include <optional>
#include <vector>

namespace cptlab {

// Reduced row echelon form of an exact matrix, with pivot columns.
template <class S>
struct Echelon {
  Matrix<S> m;
  std::vector<std::size_t> pivots;
};

template <class S>
Echelon<S> row_reduce(Matrix<S> m) {
  using T = ScalarTraits<S>;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = detail::pick_pivot(m, c, row);
    if (p == m.rows()) continue;
    detail::swap_rows(m, p, row);
    S inv = T::one() / m(row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || T::is_zero(m(r, c))) continue;
      S f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

// Some solution of a x = b, or nullopt if inconsistent.
template <class S>
std::optional<std::vector<S>> solve(const Matrix<S>& a, const std::vector<S>& b) {
  using T = ScalarTraits<S>;
  Matrix<S> aug(a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t r = 0; r < a.rows(); ++r) aug(r, a.cols()) = b[r];
  Echelon<S> e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  std::vector<S> x(a.cols(), T::zero());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.m(k, a.cols());
  return x;
}

template <class S>
std::vector<std::vector<S>> nullspace(const Matrix<S>& a) {
  using T = ScalarTraits<S>;
  Echelon<S> e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<S>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<S> v(a.cols(), T::zero());
    v[free] = T::one();
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.m(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cptlab
