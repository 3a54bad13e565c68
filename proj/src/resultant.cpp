#include "walkmat/resultant.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace walkmat {

BivarPolynomial::BivarPolynomial(std::vector<IntPolynomial> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BivarPolynomial BivarPolynomial::constant_in_t(const IntPolynomial& p) {
  std::vector<IntPolynomial> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return BivarPolynomial(std::move(c));
}

BivarPolynomial operator+(const BivarPolynomial& a, const BivarPolynomial& b) {
  std::vector<IntPolynomial> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
  return BivarPolynomial(std::move(c));
}

BivarPolynomial operator*(const IntPolynomial& q, const BivarPolynomial& a) {
  std::vector<IntPolynomial> c;
  c.reserve(a.c_.size());
  for (const auto& v : a.c_) c.push_back(q * v);
  return BivarPolynomial(std::move(c));
}

IntMatrix sylvester(const IntPolynomial& f, const IntPolynomial& g) {
  return sylvester<BigInt>(std::span<const BigInt>(f.coeffs()), std::span<const BigInt>(g.coeffs()));
}

BigInt resultant_int(const IntPolynomial& f, const IntPolynomial& g) { return det_bareiss(sylvester(f, g)); }

IntPolynomial resultant_bivar(const BivarPolynomial& f, const BivarPolynomial& g) {
  return det_berkowitz(
      sylvester<IntPolynomial>(std::span<const IntPolynomial>(f.coeffs()), std::span<const IntPolynomial>(g.coeffs())));
}

int poly_gcd_degree(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() && g.is_zero()) throw std::invalid_argument("poly_gcd_degree: both polynomials are zero");
  if (f.is_zero()) return g.degree();
  if (g.is_zero()) return f.degree();
  IntPolynomial a = f.primitive_part();
  IntPolynomial b = g.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  BigInt lead_scale(1);
  BigInt h(1);
  while (true) {
    if (b.degree() == 0) return 0;
    const int delta = a.degree() - b.degree();
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) return b.degree();
    a = std::move(b);
    b = divide_exact(r, lead_scale * power(h, static_cast<unsigned long>(delta)));
    lead_scale = a.leading();
    if (delta > 0) {
      BigInt next = power(lead_scale, static_cast<unsigned long>(delta));
      walkmat::divide_exact(next, power(h, static_cast<unsigned long>(delta - 1)));
      h = std::move(next);
    }
  }
}

namespace {

bool res_hypotheses(int m, int ell) { return ell >= 2 && 2 * ell <= m + 1 && std::gcd(ell, m + 1) == 1; }

VerificationReport res_skeleton(const char* check, int m, int ell) {
  VerificationReport r;
  r.check = check;
  r.m = m;
  r.ell = ell;
  if (!res_hypotheses(m, ell)) {
    r.status = Status::skip;
    r.detail = "hypothesis unmet: need 2 <= ell <= (m+1)/2 and gcd(ell, m+1) = 1";
  }
  return r;
}

}  // namespace

VerificationReport verify_res1(int m, int ell) {
  VerificationReport r = res_skeleton("res1", m, ell);
  if (!res_hypotheses(m, ell)) return r;
  const BigInt res = resultant_int(u_poly(m), u_poly(ell - 1) * u_poly(m - ell));
  const BigInt expected = power_of_two(static_cast<unsigned long>(m * (m - 1)));
  r.lhs = to_decimal(res);
  r.rhs = to_decimal(expected);
  r.sign = sgn(res) == 0 ? std::nullopt : std::optional<int>(sgn(res));
  r.status = abs(res) == expected ? Status::pass : Status::fail;
  r.detail = "|Res(U_m, U_{ell-1} U_{m-ell})| vs 2^" + std::to_string(m * (m - 1));
  return r;
}

VerificationReport verify_res2(int m, int ell, int max_m) {
  if (m > max_m)
    throw std::invalid_argument("verify_res2: m=" + std::to_string(m) + " exceeds the size guard " +
                                std::to_string(max_m));
  VerificationReport r = res_skeleton("res2", m, ell);
  if (!res_hypotheses(m, ell)) return r;

  const IntPolynomial um = u_poly(m);
  const IntPolynomial coupling = u_poly(ell - 1) * u_poly(m - ell);
  IntPolynomial full;
  IntPolynomial low;
  for (int k = 0; k < m; ++k) {
    const IntPolynomial uk = u_poly(k);
    full += uk;
    if (k <= ell - 2) low += uk;
  }
  const IntPolynomial u_sum = u_poly(ell - 1) * full - um * low;

  const auto f = BivarPolynomial::constant_in_t(um) + IntPolynomial::x() * BivarPolynomial::constant_in_t(coupling);
  const IntPolynomial res = resultant_bivar(f, BivarPolynomial::constant_in_t(u_sum));

  const int power_t = m / 2;
  const BigInt magnitude = power_of_two(static_cast<unsigned long>(m * (m - 1)));
  const IntPolynomial expected = IntPolynomial::monomial(magnitude, static_cast<std::size_t>(power_t));
  r.lhs = res.to_string("t");
  r.rhs = expected.to_string("t");
  const bool single_term =
      !res.is_zero() && IntPolynomial::monomial(res.leading(), static_cast<std::size_t>(power_t)) == res;
  if (!res.is_zero()) r.sign = sgn(res.leading());
  r.status = single_term && abs(res.leading()) == magnitude ? Status::pass : Status::fail;
  r.detail = "Res_x in Z[t] vs +-2^" + std::to_string(m * (m - 1)) + " t^" + std::to_string(power_t);
  return r;
}

}  // namespace walkmat
