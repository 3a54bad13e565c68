#include "walkmat/linalg.hpp"

#include <stdexcept>

namespace walkmat {

BigInt det_bareiss(IntMatrix m) {
  if (!m.is_square()) throw std::invalid_argument("det_bareiss: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return BigInt(1);
  int sign = 1;
  BigInt prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && sgn(m(pivot, k)) == 0) ++pivot;
    if (pivot == n) return BigInt(0);
    if (pivot != k) {
      m.swap_rows(pivot, k);
      sign = -sign;
    }
    const BigInt& p = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const BigInt& lead = m(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        // m(i,j) = (p*m(i,j) - lead*m(k,j)) / prev
        BigInt& target = m(i, j);
        target *= p;
        mpz_submul(target.get_mpz_t(), lead.get_mpz_t(), m(k, j).get_mpz_t());
        divide_exact(target, prev);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  BigInt det = m(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

IntMatrix walk_matrix(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("walk_matrix: matrix is not square");
  const std::size_t n = a.rows();
  IntMatrix w(n, n);
  std::vector<BigInt> col(n, BigInt(1));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) w(i, k) = col[i];
    if (k + 1 < n) col = a.apply(col);
  }
  return w;
}

IntMatrix adjacency_matrix(const Graph& g) {
  const std::size_t n = g.order();
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.adjacent(i, j)) a(i, j) = 1;
  return a;
}

IntMatrix walk_matrix(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> neighbours(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.adjacent(i, j)) neighbours[i].push_back(j);
  IntMatrix w(n, n);
  std::vector<BigInt> col(n, BigInt(1));
  std::vector<BigInt> next(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) w(i, k) = col[i];
    if (k + 1 == n) break;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] = 0;
      for (auto j : neighbours[i]) next[i] += col[j];
    }
    std::swap(col, next);
  }
  return w;
}

}  // namespace walkmat
