#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "walkmat/bigint.hpp"

namespace walkmat {

/// Dense univariate polynomial over Z. coeffs()[k] is the x^k coefficient;
/// trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(long constant);  // NOLINT: constants embed implicitly (ring contract)
  IntPolynomial(const BigInt& constant);  // NOLINT
  IntPolynomial(std::initializer_list<long> coeffs);
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial x() { return IntPolynomial({0, 1}); }
  static IntPolynomial monomial(const BigInt& c, std::size_t k);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }
  BigInt coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }
  /// Leading coefficient; zero for the zero polynomial.
  BigInt leading() const { return c_.empty() ? BigInt(0) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  BigInt operator()(const BigInt& v) const;
  double operator()(double v) const;
  IntPolynomial derivative() const;
  /// p(a*x + b).
  IntPolynomial compose_affine(const BigInt& a, const BigInt& b) const;
  /// Gcd of the coefficients, nonnegative; zero for the zero polynomial.
  BigInt content() const;
  /// Divides out the content and makes the leading coefficient positive.
  IntPolynomial primitive_part() const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  IntPolynomial& operator*=(const BigInt& s);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }
  friend IntPolynomial operator*(const BigInt& s, IntPolynomial a) { return a *= s; }
  IntPolynomial operator-() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Human-readable form, highest power first, e.g. "x^2 - 1".
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

IntPolynomial pow(const IntPolynomial& p, unsigned k);

/// prem(a, b) = lc(b)^(deg a - deg b + 1) * a mod b, computed over Z.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Divides every coefficient by d; the division must be exact.
IntPolynomial divide_exact(const IntPolynomial& p, const BigInt& d);

}  // namespace walkmat
