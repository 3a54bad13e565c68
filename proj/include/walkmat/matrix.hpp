#pragma once

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "walkmat/bigint.hpp"

namespace walkmat {

/// Commutative ring with unit. Instantiated with BigInt and IntPolynomial.
template <typename T>
concept Ring = std::regular<T> && requires(const T& a, const T& b) {
  T(0);
  T(1);
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
};

namespace detail {

template <Ring T>
inline void add_product(T& acc, const T& a, const T& b) {
  acc += a * b;
}
inline void add_product(BigInt& acc, const BigInt& a, const BigInt& b) { walkmat::add_product(acc, a, b); }

template <Ring T>
inline bool is_zero(const T& a) {
  return a == T(0);
}
inline bool is_zero(const BigInt& a) { return sgn(a) == 0; }

}  // namespace detail

/// Dense row-major matrix over a ring.
template <Ring T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: inner dimensions differ");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (detail::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) detail::add_product(r(i, j), aik, b(k, j));
      }
    return r;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector product: size mismatch");
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const T& aij = (*this)(i, j);
        if (!detail::is_zero(aij)) detail::add_product(out[i], aij, v[j]);
      }
    return out;
  }

 private:
  static void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Block matrix whose (i, j) block is a(i, j) * b.
template <Ring T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T& s = a(i, j);
      if (detail::is_zero(s)) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) r(i * b.rows() + p, j * b.cols() + q) = s * b(p, q);
    }
  return r;
}

/// Coefficients of det(xI - M), constant term first, by Berkowitz's
/// division-free algorithm. O(n^4) ring operations, valid over any
/// commutative ring.
///
/// With M_r the leading r x r block split as [[M_{r-1}, c], [row, d]], the
/// polynomial of M_r is the lower-triangular Toeplitz matrix with first
/// column (1, -d, -row*c, -row*M_{r-1}*c, ..., -row*M_{r-1}^{r-2}*c)
/// applied to the polynomial of M_{r-1}.
template <Ring T>
std::vector<T> charpoly_berkowitz(const Matrix<T>& m) {
  if (!m.is_square()) throw std::invalid_argument("charpoly: matrix is not square");
  const std::size_t n = m.rows();
  std::vector<T> poly{T(1)};  // leading coefficient first while iterating
  for (std::size_t r = 1; r <= n; ++r) {
    const std::size_t k = r - 1;  // index of the new row/column
    std::vector<T> toeplitz(r + 1, T(0));
    toeplitz[0] = T(1);
    toeplitz[1] = -m(k, k);
    std::vector<T> v(k, T(0));
    for (std::size_t i = 0; i < k; ++i) v[i] = m(i, k);
    for (std::size_t p = 2; p <= r; ++p) {
      T dot(0);
      for (std::size_t j = 0; j < k; ++j)
        if (!detail::is_zero(m(k, j))) detail::add_product(dot, m(k, j), v[j]);
      toeplitz[p] = -dot;
      if (p == r) break;
      std::vector<T> next(k, T(0));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          if (!detail::is_zero(m(i, j))) detail::add_product(next[i], m(i, j), v[j]);
      v = std::move(next);
    }
    std::vector<T> updated(r + 1, T(0));
    for (std::size_t i = 0; i <= r; ++i)
      for (std::size_t j = 0; j < poly.size() && j <= i; ++j)
        if (!detail::is_zero(toeplitz[i - j])) detail::add_product(updated[i], toeplitz[i - j], poly[j]);
    poly = std::move(updated);
  }
  return std::vector<T>(poly.rbegin(), poly.rend());
}

/// Division-free determinant: (-1)^n times the constant term of det(xI - M).
template <Ring T>
T det_berkowitz(const Matrix<T>& m) {
  auto poly = charpoly_berkowitz(m);
  T c = poly.front();
  return m.rows() % 2 == 0 ? c : T(-c);
}

}  // namespace walkmat
