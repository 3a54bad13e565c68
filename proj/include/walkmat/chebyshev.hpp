#pragma once

#include <vector>

#include "walkmat/linalg.hpp"
#include "walkmat/polynomial.hpp"

namespace walkmat {

/// Renormalized Chebyshev polynomial of the second kind:
/// S_{-1} = 0, S_0 = 1, S_k = x*S_{k-1} - S_{k-2}. S_k(x) = U_k(x/2), and
/// S_m is the characteristic polynomial of the path on m vertices.
IntPolynomial s_poly(int k);

/// Chebyshev polynomial of the second kind, U_m(x) = S_m(2x).
IntPolynomial u_poly(int m);

/// {a, a+2, ..., b}; requires 0 <= a <= b and a = b (mod 2).
class IndexSet {
 public:
  IndexSet(int a, int b);
  int first() const noexcept { return a_; }
  int last() const noexcept { return b_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>((b_ - a_) / 2 + 1); }
  bool contains(int i) const noexcept { return i >= a_ && i <= b_ && (i - a_) % 2 == 0; }
  std::vector<int> members() const;
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  int a_;
  int b_;
};

/// Index set I with S_p * S_q = sum_{i in I} S_i, namely {p-q, ..., p+q}.
/// Requires p >= q >= 0.
IndexSet s_product_indexset(int p, int q);

/// sum_{i in I} S_i.
IntPolynomial s_sum_over(const IndexSet& set);

// The three functions below take 2 <= m and 1 <= ell <= (m+1)/2.

/// f_k = S_{ell-1} S_{m-k} - S_m S_{ell-k-1} for k < ell, and
/// S_{ell-1} S_{m-k} for ell <= k <= m.
IntPolynomial f_poly(int m, int ell, int k);

/// S(x) = S_{ell-1} * sum_{k<m} S_k - S_m * sum_{k<=ell-2} S_k, which is
/// also sum_k f_k; monic of degree m-1.
IntPolynomial s_sum_poly(int m, int ell);

/// 0/1 matrix B with (f_1..f_m)^T = B (S_0..S_{m-1})^T together with the
/// row index sets I_k (B(k-1, j) = 1 iff j in I_k).
struct ConsecutiveOnes {
  IntMatrix b;
  std::vector<IndexSet> rows;
};
ConsecutiveOnes cones_matrix(int m, int ell);

/// Reorders columns as 1, 3, 5, ... then 2, 4, ... (1-based column numbers).
IntMatrix odd_even_column_permutation(const IntMatrix& b);

/// True when every row's ones form one contiguous run.
bool rows_have_consecutive_ones(const IntMatrix& b);

}  // namespace walkmat
