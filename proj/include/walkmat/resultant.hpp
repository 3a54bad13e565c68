#pragma once

#include <span>
#include <vector>

#include "walkmat/chebyshev.hpp"
#include "walkmat/matrix.hpp"
#include "walkmat/polynomial.hpp"
#include "walkmat/report.hpp"

namespace walkmat {

/// Polynomial in x whose coefficients are polynomials in an outer variable t.
/// coeffs()[k] multiplies x^k; trailing zero coefficients are trimmed.
class BivarPolynomial {
 public:
  BivarPolynomial() = default;
  explicit BivarPolynomial(std::vector<IntPolynomial> coeffs);
  /// Embeds p(x) with constant coefficients in t.
  static BivarPolynomial constant_in_t(const IntPolynomial& p);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<IntPolynomial>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }

  friend BivarPolynomial operator+(const BivarPolynomial& a, const BivarPolynomial& b);
  /// Multiplies every x-coefficient by q(t).
  friend BivarPolynomial operator*(const IntPolynomial& q, const BivarPolynomial& a);
  friend bool operator==(const BivarPolynomial&, const BivarPolynomial&) = default;

 private:
  std::vector<IntPolynomial> c_;
};

/// Sylvester matrix of f (degree n) and g (degree m), coefficient arrays
/// constant term first. Rows 0..m-1 carry shifted copies of f, rows
/// m..m+n-1 copies of g, so det = lc(f)^m * prod g(roots of f).
template <Ring T>
Matrix<T> sylvester(std::span<const T> f, std::span<const T> g) {
  if (f.empty() || g.empty()) throw std::invalid_argument("sylvester: zero polynomial");
  if (f.back() == T(0) || g.back() == T(0)) throw std::invalid_argument("sylvester: untrimmed leading coefficient");
  const std::size_t n = f.size() - 1;
  const std::size_t m = g.size() - 1;
  if (n + m == 0) throw std::invalid_argument("sylvester: both polynomials are constant");
  Matrix<T> s(n + m, n + m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s(r, r + k) = f[n - k];
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s(m + r, r + k) = g[m - k];
  return s;
}

IntMatrix sylvester(const IntPolynomial& f, const IntPolynomial& g);

/// Res(f, g) = det(Sylvester(f, g)) over Z, by Bareiss elimination.
/// One constant argument c gives c^(degree of the other).
BigInt resultant_int(const IntPolynomial& f, const IntPolynomial& g);

/// Res_x(f, g) as a polynomial in t: the Sylvester determinant over Z[t],
/// evaluated with the division-free Berkowitz algorithm.
IntPolynomial resultant_bivar(const BivarPolynomial& f, const BivarPolynomial& g);

/// Degree of gcd(f, g) over Q via the subresultant remainder sequence.
/// Throws if both are zero; gcd(f, 0) = f.
int poly_gcd_degree(const IntPolynomial& f, const IntPolynomial& g);

inline bool is_square_free(const IntPolynomial& f) { return f.degree() <= 0 || poly_gcd_degree(f, f.derivative()) == 0; }

/// Checks |Res(U_m, U_{ell-1} U_{m-ell})| = 2^{m(m-1)}.
/// Skips unless 2 <= ell <= (m+1)/2 and gcd(ell, m+1) = 1.
VerificationReport verify_res1(int m, int ell);

/// Checks that Res_x(U_m + t U_{ell-1} U_{m-ell}, U_{ell-1} sum_{k<m} U_k -
/// U_m sum_{k<=ell-2} U_k) is the single term +-2^{m(m-1)} t^{floor(m/2)}.
/// Same hypotheses as verify_res1; m above `max_m` is rejected.
VerificationReport verify_res2(int m, int ell, int max_m = 12);

}  // namespace walkmat
