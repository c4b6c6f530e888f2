#pragma once

#include "cptlab/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cptlab {

template <class S>
class Matrix {
public:
  using Traits = ScalarTraits<S>;
  using value_type = S;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Traits::zero()) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<S> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw std::invalid_argument("matrix data size mismatch");
  }
  Matrix(std::initializer_list<std::initializer_list<S>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Traits::one();
    return m;
  }
  static Matrix diagonal(const std::vector<S>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const S& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
  friend Matrix operator*(const S& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (Traits::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (Traits::is_zero(b(k, j))) continue;
          out(i, j) += aik * b(k, j);
        }
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  Matrix conj() const {
    Matrix c = *this;
    for (auto& x : c.data_) x = Traits::conj(x);
    return c;
  }
  Matrix adjoint() const { return conj().transpose(); }

  std::vector<S> row(std::size_t r) const {
    return std::vector<S>(data_.begin() + static_cast<long>(r * cols_),
                          data_.begin() + static_cast<long>((r + 1) * cols_));
  }
  std::vector<S> apply(const std::vector<S>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<S> out(rows_, Traits::zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!Traits::is_zero((*this)(i, j))) out[i] += (*this)(i, j) * v[j];
    return out;
  }
  // Row vector times matrix.
  std::vector<S> left_apply(const std::vector<S>& r) const {
    if (r.size() != rows_) throw std::invalid_argument("row-matrix shape mismatch");
    std::vector<S> out(cols_, Traits::zero());
    for (std::size_t i = 0; i < rows_; ++i) {
      if (Traits::is_zero(r[i])) continue;
      for (std::size_t j = 0; j < cols_; ++j)
        if (!Traits::is_zero((*this)(i, j))) out[j] += r[i] * (*this)(i, j);
    }
    return out;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  S trace() const {
    S t = Traits::zero();
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const S& x) { return Traits::is_zero(x); });
  }

  double max_abs() const {
    double m = 0;
    for (const auto& x : data_) m = std::max(m, Traits::magnitude(x));
    return m;
  }

  const std::vector<S>& data() const { return data_; }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? "; " : "";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + Traits::str((*this)(i, j));
    }
    return s + "]";
  }

private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

using ExactMatrix = Matrix<GaussianRational>;
using FloatMatrix = Matrix<Complex>;

template <class S>
Matrix<S> convert_matrix(const ExactMatrix& m) {
  Matrix<S> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = from_exact<S>(m(i, j));
  return out;
}

inline FloatMatrix to_float(const ExactMatrix& m) { return convert_matrix<Complex>(m); }
inline const FloatMatrix& to_float(const FloatMatrix& m) { return m; }

template <class S>
Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (ScalarTraits<S>::is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

template <class S>
Matrix<S> block_diag(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> out(a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

namespace detail {

template <class S>
std::size_t pick_pivot(const Matrix<S>& m, std::size_t col, std::size_t start) {
  std::size_t best = m.rows();
  double best_mag = 0;
  for (std::size_t r = start; r < m.rows(); ++r) {
    if (ScalarTraits<S>::is_zero(m(r, col))) continue;
    if constexpr (ScalarTraits<S>::exact) return r;
    double mag = ScalarTraits<S>::magnitude(m(r, col));
    if (mag > best_mag) {
      best_mag = mag;
      best = r;
    }
  }
  return best;
}

template <class S>
void swap_rows(Matrix<S>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace detail

template <class S>
S determinant(Matrix<S> m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  using T = ScalarTraits<S>;
  S det = T::one();
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = detail::pick_pivot(m, c, c);
    if (p == n) return T::zero();
    if (p != c) {
      detail::swap_rows(m, p, c);
      det = -det;
    }
    det *= m(c, c);
    S inv = T::one() / m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (T::is_zero(m(r, c))) continue;
      S f = m(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

template <class S>
Matrix<S> inverse(const Matrix<S>& a) {
  if (!a.square()) throw std::invalid_argument("inverse of non-square matrix");
  using T = ScalarTraits<S>;
  const std::size_t n = a.rows();
  Matrix<S> m = a;
  Matrix<S> inv = Matrix<S>::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = detail::pick_pivot(m, c, c);
    if (p == n) throw std::domain_error("singular matrix");
    detail::swap_rows(m, p, c);
    detail::swap_rows(inv, p, c);
    S piv = T::one() / m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) *= piv;
      inv(c, j) *= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || T::is_zero(m(r, c))) continue;
      S f = m(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) -= f * m(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

template <class S>
bool approx_equal(const Matrix<S>& a, const Matrix<S>& b, double tol = 1e-9) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if constexpr (ScalarTraits<S>::exact) {
    (void)tol;
    return a == b;
  } else {
    double scale = std::max({1.0, a.max_abs(), b.max_abs()});
    return (a - b).max_abs() <= tol * scale;
  }
}

inline FloatMatrix real_part(const FloatMatrix& m) {
  FloatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Complex(m(i, j).real(), 0.0);
  return out;
}

// Matrix exponential by scaling and squaring with a Taylor series.
inline FloatMatrix expm(const FloatMatrix& a) {
  const std::size_t n = a.rows();
  double norm = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0;
    for (std::size_t j = 0; j < n; ++j) row += std::abs(a(i, j));
    norm = std::max(norm, row);
  }
  int squarings = 0;
  while (norm > 0.5) {
    norm /= 2;
    ++squarings;
  }
  FloatMatrix x = a * Complex(std::ldexp(1.0, -squarings), 0.0);
  FloatMatrix result = FloatMatrix::identity(n);
  FloatMatrix term = FloatMatrix::identity(n);
  for (int k = 1; k < 40; ++k) {
    term = term * x;
    term *= Complex(1.0 / k, 0.0);
    result += term;
    if (term.max_abs() < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

}  // namespace cptlab
