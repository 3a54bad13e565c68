#include <cmath>
#include <numeric>

#include "doctest.h"
#include "walkmat/chebyshev.hpp"

using namespace walkmat;

TEST_CASE("first few S_k and U_k") {
  CHECK(s_poly(-1).is_zero());
  CHECK(s_poly(0) == IntPolynomial(1));
  CHECK(s_poly(1) == IntPolynomial({0, 1}));
  CHECK(s_poly(2) == IntPolynomial({-1, 0, 1}));
  CHECK(s_poly(3) == IntPolynomial({0, -2, 0, 1}));
  CHECK(s_poly(4) == IntPolynomial({1, 0, -3, 0, 1}));
  CHECK(u_poly(2) == IntPolynomial({-1, 0, 4}));
  CHECK(u_poly(3) == IntPolynomial({0, -4, 0, 8}));
  CHECK_THROWS_AS(s_poly(-2), std::invalid_argument);
}

TEST_CASE("S_k satisfies the three-term recurrence and its values at +-2") {
  const IntPolynomial x = IntPolynomial::x();
  for (int k = 1; k <= 40; ++k) {
    CHECK(s_poly(k) == x * s_poly(k - 1) - s_poly(k - 2));
    CHECK(s_poly(k)(BigInt(2)) == k + 1);
    CHECK(s_poly(k)(BigInt(-2)) == (k % 2 ? -(k + 1) : k + 1));
    CHECK(s_poly(k).is_monic());
    CHECK(s_poly(k).degree() == k);
  }
}

TEST_CASE("S_k is the characteristic polynomial of the path") {
  for (int k = 1; k <= 8; ++k)
    CHECK(IntPolynomial(charpoly_berkowitz(adjacency_matrix(path_graph(static_cast<std::size_t>(k))))) == s_poly(k));
}

TEST_CASE("product of two S polynomials is a sum over an index set") {
  for (int p = 0; p <= 15; ++p)
    for (int q = 0; q <= p; ++q) {
      const IndexSet set = s_product_indexset(p, q);
      CHECK(set.first() == p - q);
      CHECK(set.last() == p + q);
      CHECK(set.size() == static_cast<std::size_t>(q + 1));
      CHECK(s_poly(p) * s_poly(q) == s_sum_over(set));
    }
  CHECK_THROWS_AS(s_product_indexset(2, 3), std::invalid_argument);
}

TEST_CASE("IndexSet basics") {
  const IndexSet s(1, 7);
  CHECK(s.members() == std::vector<int>{1, 3, 5, 7});
  CHECK(s.contains(5));
  CHECK_FALSE(s.contains(4));
  CHECK_FALSE(s.contains(9));
  CHECK_THROWS_AS(IndexSet(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(IndexSet(-1, 1), std::invalid_argument);
}

TEST_CASE("f_k on a small case") {
  // m = 3, ell = 2: f_1 = S_1 S_2 - S_3 S_0 = x, f_2 = S_1 S_1, f_3 = S_1 S_0.
  CHECK(f_poly(3, 2, 1) == IntPolynomial({0, 1}));
  CHECK(f_poly(3, 2, 2) == IntPolynomial({0, 0, 1}));
  CHECK(f_poly(3, 2, 3) == IntPolynomial({0, 1}));
  CHECK_THROWS_AS(f_poly(3, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(f_poly(1, 1, 1), std::invalid_argument);
}

TEST_CASE("consecutive-ones matrix reconstructs f_k") {
  for (int m = 2; m <= 12; ++m)
    for (int ell = 1; 2 * ell <= m + 1; ++ell) {
      CAPTURE(m);
      CAPTURE(ell);
      const ConsecutiveOnes c = cones_matrix(m, ell);
      REQUIRE(c.b.rows() == static_cast<std::size_t>(m));
      REQUIRE(c.b.cols() == static_cast<std::size_t>(m));
      IntPolynomial total;
      for (int k = 1; k <= m; ++k) {
        IntPolynomial from_row;
        for (int j = 0; j < m; ++j) {
          const BigInt& entry = c.b(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(j));
          CHECK((entry == 0 || entry == 1));
          CHECK((entry == 1) == c.rows[static_cast<std::size_t>(k - 1)].contains(j));
          if (entry == 1) from_row += s_poly(j);
        }
        CHECK(from_row == f_poly(m, ell, k));
        CHECK(from_row == s_sum_over(c.rows[static_cast<std::size_t>(k - 1)]));
        total += from_row;
      }
      const IntPolynomial s = s_sum_poly(m, ell);
      CHECK(total == s);
      CHECK(s.is_monic());
      CHECK(s.degree() == m - 1);
      CHECK(rows_have_consecutive_ones(odd_even_column_permutation(c.b)));
    }
}

TEST_CASE("column permutation and consecutive-ones detector") {
  IntMatrix b(2, 4);
  b(0, 0) = 1;
  b(0, 2) = 1;
  b(1, 1) = 1;
  b(1, 3) = 1;
  CHECK_FALSE(rows_have_consecutive_ones(b));
  const IntMatrix p = odd_even_column_permutation(b);
  CHECK(p(0, 0) == 1);
  CHECK(p(0, 1) == 1);
  CHECK(p(1, 2) == 1);
  CHECK(p(1, 3) == 1);
  CHECK(rows_have_consecutive_ones(p));
  CHECK(rows_have_consecutive_ones(IntMatrix(3, 3)));
}

TEST_CASE("S_k at zero and U_m on the unit circle") {
  for (int k = 0; k <= 20; ++k) {
    const BigInt v = s_poly(k)(BigInt(0));
    if (k % 2) {
      CHECK(v == 0);
    } else {
      CHECK(abs(v) == 1);
    }
  }
  const double theta = 3.14159265358979323846 / 7;
  for (int m = 0; m <= 10; ++m)
    CHECK(std::abs(u_poly(m)(std::cos(theta)) * std::sin(theta) - std::sin((m + 1) * theta)) <= 1e-12);
}

TEST_CASE("index sets and f_k spot values") {
  CHECK(s_product_indexset(1, 1) == IndexSet(0, 2));
  CHECK(s_product_indexset(5, 3) == IndexSet(2, 8));
  CHECK(f_poly(4, 2, 1) == IntPolynomial({-1, 0, 1}));
  CHECK(s_sum_poly(3, 2) == IntPolynomial({0, 2, 1}));
}

TEST_CASE("only row ell reaches the last column") {
  for (int m = 2; m <= 12; ++m)
    for (int ell = 1; 2 * ell <= m + 1; ++ell) {
      const ConsecutiveOnes c = cones_matrix(m, ell);
      for (int k = 1; k <= m; ++k) {
        CHECK(c.rows[static_cast<std::size_t>(k - 1)].last() <= m - 1);
        CHECK(c.rows[static_cast<std::size_t>(k - 1)].contains(m - 1) == (k == ell));
      }
    }
}

TEST_CASE("consecutive-ones matrix is unimodular when gcd(ell, m+1) = 1") {
  for (int m = 2; m <= 30; ++m)
    for (int ell = 1; 2 * ell <= m + 1; ++ell)
      if (std::gcd(ell, m + 1) == 1) CHECK(abs(det_bareiss(cones_matrix(m, ell).b)) == 1);
}
