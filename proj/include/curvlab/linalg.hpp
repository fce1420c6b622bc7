#pragma once

// Dense matrices over either scalar backend, with the handful of exact
// elimination routines the rest of the library needs.

#include "curvlab/error.hpp"
#include "curvlab/scalar.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace curvlab {

template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  template <class T>
  Matrix<T> cast() const {
    Matrix<T> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = scalar_cast<T>((*this)(r, c));
    return out;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& x : data_) m = std::max(m, std::abs(scalar_cast<double>(x)));
    return m;
  }

  /// Exact zero test for rationals; for doubles, every entry within `tol`
  /// relative to `scale` (at least 1).
  bool is_zero(double tol = kDefaultTol, double scale = 1.0) const {
    for (const auto& x : data_)
      if (!curvlab::is_zero(x, tol, scale)) return false;
    return true;
  }

  bool is_symmetric(double tol = kDefaultTol) const {
    if (!square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = r + 1; c < cols_; ++c)
        if (!nearly_equal((*this)(r, c), (*this)(c, r), tol)) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const S& k) {
    for (auto& x : data_) x *= k;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const S& k) { return a *= k; }
  friend Matrix operator*(const S& k, Matrix a) { return a *= k; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const S& bkj = b(k, j);
          if (bkj != 0) out(i, j) += aik * bkj;
        }
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

/// Entrywise comparison: exact for rationals, relative to the larger max-abs
/// entry for doubles.
template <class S>
bool nearly_equal(const Matrix<S>& a, const Matrix<S>& b, double tol = kDefaultTol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if constexpr (ScalarTraits<S>::exact) {
    return a == b;
  } else {
    return (a - b).is_zero(tol, std::max(a.max_abs(), b.max_abs()));
  }
}

namespace detail {

// Pivot choice: first nonzero for exact arithmetic, largest magnitude for
// doubles. Returns rows() when the column is (numerically) zero.
template <class S>
std::size_t find_pivot(const Matrix<S>& m, std::size_t col, std::size_t from, double tol,
                       double scale) {
  std::size_t best = m.rows();
  double best_abs = 0.0;
  for (std::size_t r = from; r < m.rows(); ++r) {
    if constexpr (ScalarTraits<S>::exact) {
      if (m(r, col) != 0) return r;
    } else {
      double v = std::abs(m(r, col));
      if (v > best_abs) {
        best_abs = v;
        best = r;
      }
    }
  }
  if constexpr (!ScalarTraits<S>::exact) {
    if (best_abs <= tol * std::max(1.0, scale)) return m.rows();
  }
  return best;
}

template <class S>
void swap_rows(Matrix<S>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

}  // namespace detail

/// Reduced row echelon form in place; returns the pivot columns.
template <class S>
std::vector<std::size_t> row_reduce(Matrix<S>& m, double tol = kDefaultTol) {
  const double scale = m.max_abs();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = detail::find_pivot(m, col, row, tol, scale);
    if (p == m.rows()) continue;
    detail::swap_rows(m, p, row);
    S inv = S(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      S f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class S>
std::size_t rank(Matrix<S> m, double tol = kDefaultTol) {
  return row_reduce(m, tol).size();
}

/// Basis of the right null space, one vector per free column.
template <class S>
std::vector<std::vector<S>> null_space(Matrix<S> m, double tol = kDefaultTol) {
  auto pivots = row_reduce(m, tol);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<S>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<S> v(m.cols(), S(0));
    v[free] = S(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class S>
S determinant(Matrix<S> m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  S det(1);
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = detail::find_pivot(m, col, col, 0.0, 0.0);
    if (p == n) return S(0);
    if (p != col) {
      detail::swap_rows(m, p, col);
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      S f = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

/// Solves A X = B for square invertible A.
template <class S>
Matrix<S> solve(const Matrix<S>& a, const Matrix<S>& b, double tol = kDefaultTol) {
  if (!a.square() || a.rows() != b.rows()) throw DimensionError("solve: shape mismatch");
  const std::size_t n = a.rows();
  Matrix<S> aug(n, n + b.cols());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, n + c) = b(r, c);
  }
  auto pivots = row_reduce(aug, tol);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw SingularError("solve: singular matrix");
  Matrix<S> x(n, b.cols());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) x(r, c) = aug(r, n + c);
  return x;
}

template <class S>
Matrix<S> inverse(const Matrix<S>& a, double tol = kDefaultTol) {
  return solve(a, Matrix<S>::identity(a.rows()), tol);
}

/// Rank of an integer matrix by Bareiss fraction-free elimination; every
/// intermediate stays an exact integer.
inline std::size_t rank_fraction_free(Matrix<BigInt> m) {
  std::size_t rank = 0;
  BigInt prev(1);
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    detail::swap_rows(m, p, rank);
    const BigInt pivot = m(rank, col);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      for (std::size_t c = col + 1; c < m.cols(); ++c) {
        m(r, c) = (pivot * m(r, c) - m(r, col) * m(rank, c)) / prev;
      }
      m(r, col) = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

}  // namespace curvlab
