#include "walkmat/chebyshev.hpp"

#include <stdexcept>
#include <string>

namespace walkmat {

namespace {

void require_path_params(int m, int ell, const char* who) {
  if (m < 2 || ell < 1 || 2 * ell > m + 1)
    throw std::invalid_argument(std::string(who) + ": need 2 <= m and 1 <= ell <= (m+1)/2, got m=" +
                                std::to_string(m) + " ell=" + std::to_string(ell));
}

}  // namespace

IntPolynomial s_poly(int k) {
  if (k < -1) throw std::invalid_argument("s_poly: k must be >= -1");
  if (k == -1) return {};
  IntPolynomial prev;      // S_{-1}
  IntPolynomial cur(1);    // S_0
  const IntPolynomial x = IntPolynomial::x();
  for (int i = 1; i <= k; ++i) {
    IntPolynomial next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPolynomial u_poly(int m) {
  if (m < 0) throw std::invalid_argument("u_poly: m must be >= 0");
  return s_poly(m).compose_affine(BigInt(2), BigInt(0));
}

IndexSet::IndexSet(int a, int b) : a_(a), b_(b) {
  if (a < 0 || a > b || (b - a) % 2 != 0)
    throw std::invalid_argument("IndexSet: need 0 <= a <= b with a = b (mod 2), got (" + std::to_string(a) + "," +
                                std::to_string(b) + ")");
}

std::vector<int> IndexSet::members() const {
  std::vector<int> out;
  for (int i = a_; i <= b_; i += 2) out.push_back(i);
  return out;
}

IndexSet s_product_indexset(int p, int q) {
  if (q < 0 || p < q) throw std::invalid_argument("s_product_indexset: need p >= q >= 0");
  return IndexSet(p - q, p + q);
}

IntPolynomial s_sum_over(const IndexSet& set) {
  IntPolynomial acc;
  for (int i : set.members()) acc += s_poly(i);
  return acc;
}

IntPolynomial f_poly(int m, int ell, int k) {
  require_path_params(m, ell, "f_poly");
  if (k < 1 || k > m) throw std::invalid_argument("f_poly: need 1 <= k <= m");
  IntPolynomial f = s_poly(ell - 1) * s_poly(m - k);
  if (k <= ell - 1) f -= s_poly(m) * s_poly(ell - k - 1);
  return f;
}

IntPolynomial s_sum_poly(int m, int ell) {
  require_path_params(m, ell, "s_sum_poly");
  IntPolynomial low;
  IntPolynomial full;
  for (int k = 0; k < m; ++k) {
    const IntPolynomial sk = s_poly(k);
    full += sk;
    if (k <= ell - 2) low += sk;
  }
  return s_poly(ell - 1) * full - s_poly(m) * low;
}

ConsecutiveOnes cones_matrix(int m, int ell) {
  require_path_params(m, ell, "cones_matrix");
  ConsecutiveOnes out{IntMatrix(static_cast<std::size_t>(m), static_cast<std::size_t>(m)), {}};
  for (int k = 1; k <= m; ++k) {
    if (k <= ell - 1)
      out.rows.emplace_back(m - ell - k + 1, m - ell + k - 1);
    else if (k <= m + 1 - ell)
      out.rows.emplace_back(m - ell - k + 1, m + ell - k - 1);
    else
      out.rows.emplace_back(ell + k - m - 1, ell - k + m - 1);
    for (int j : out.rows.back().members()) {
      if (j > m - 1) throw std::logic_error("cones_matrix: index set leaves {0..m-1}");
      out.b(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(j)) = 1;
    }
  }
  return out;
}

IntMatrix odd_even_column_permutation(const IntMatrix& b) {
  IntMatrix out(b.rows(), b.cols());
  std::size_t dst = 0;
  for (std::size_t start : {std::size_t{0}, std::size_t{1}})
    for (std::size_t src = start; src < b.cols(); src += 2, ++dst)
      for (std::size_t i = 0; i < b.rows(); ++i) out(i, dst) = b(i, src);
  return out;
}

bool rows_have_consecutive_ones(const IntMatrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i) {
    int runs = 0;
    bool inside = false;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const bool one = b(i, j) != 0;
      if (one && !inside) ++runs;
      inside = one;
    }
    if (runs > 1) return false;
  }
  return true;
}

}  // namespace walkmat
