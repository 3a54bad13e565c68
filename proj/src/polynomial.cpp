#include "walkmat/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace walkmat {

IntPolynomial::IntPolynomial(long constant) {
  if (constant != 0) c_.emplace_back(constant);
}

IntPolynomial::IntPolynomial(const BigInt& constant) {
  if (constant != 0) c_.push_back(constant);
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t k) {
  std::vector<BigInt> v(k + 1, BigInt(0));
  v[k] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

BigInt IntPolynomial::operator()(const BigInt& v) const {
  BigInt acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= v;
    acc += *it;
  }
  return acc;
}

double IntPolynomial::operator()(double v) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + it->get_d();
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigInt> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::compose_affine(const BigInt& a, const BigInt& b) const {
  const IntPolynomial inner(std::vector<BigInt>{b, a});
  IntPolynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= inner;
    acc += IntPolynomial(*it);
  }
  return acc;
}

BigInt IntPolynomial::content() const {
  BigInt g(0);
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (c_.empty()) return {};
  BigInt g = content();
  if (sgn(c_.back()) < 0) g = -g;
  return divide_exact(*this, g);
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) add_product(r[i + j], a.c_[i], b.c_[j]);
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  *this = *this * o;
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= s;
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t idx = c_.size(); idx-- > 0;) {
    const BigInt& c = c_[idx];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const BigInt mag = abs(c);
    if (idx == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += var;
    if (idx > 1) out += "^" + std::to_string(idx);
  }
  return out;
}

IntPolynomial pow(const IntPolynomial& p, unsigned k) {
  IntPolynomial result(1);
  IntPolynomial base = p;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo_remainder: division by zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> r = a.coeffs();
  const auto& bc = b.coeffs();
  const BigInt lb = b.leading();
  const int db = b.degree();
  for (int top = a.degree(); top >= db; --top) {
    const BigInt lead = r[static_cast<std::size_t>(top)];
    for (auto& v : r) v *= lb;
    for (int k = 0; k <= db; ++k)
      mpz_submul(r[static_cast<std::size_t>(top - db + k)].get_mpz_t(), lead.get_mpz_t(),
                 bc[static_cast<std::size_t>(k)].get_mpz_t());
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial divide_exact(const IntPolynomial& p, const BigInt& d) {
  if (d == 0) throw std::invalid_argument("divide_exact: division by zero");
  std::vector<BigInt> out = p.coeffs();
  for (auto& v : out) {
    if (!mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()))
      throw std::domain_error("divide_exact: coefficient not divisible");
    walkmat::divide_exact(v, d);
  }
  return IntPolynomial(std::move(out));
}

}  // namespace walkmat
