#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace walkmat {

using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline BigInt from_decimal(const std::string& s) { return BigInt(s, 10); }

inline int sign_of(const BigInt& v) { return sgn(v); }

inline BigInt abs_value(const BigInt& v) { return abs(v); }

inline BigInt power(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline BigInt power_of_two(unsigned long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, exp);
  return r;
}

// Largest k with 2^k | v; -1 stands for v == 0 (infinite valuation).
inline long two_adic_valuation(const BigInt& v) {
  if (v == 0) return -1;
  return static_cast<long>(mpz_scan1(v.get_mpz_t(), 0));
}

// acc += a * b without a temporary.
inline void add_product(BigInt& acc, const BigInt& a, const BigInt& b) {
  mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

inline void divide_exact(BigInt& v, const BigInt& d) {
  mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
}

}  // namespace walkmat
