#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <string>

#include "walkmat/chebyshev.hpp"
#include "walkmat/linalg.hpp"
#include "walkmat/spectral.hpp"

namespace walkmat {

namespace {

constexpr double kMinEigengap = 1e-6;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

Eigen::MatrixXd dense_adjacency(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (g.adjacent(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) a(i, j) = 1.0;
  return a;
}

double min_gap(const Eigen::VectorXd& sorted) {
  double gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 1; i < sorted.size(); ++i) gap = std::min(gap, sorted(i) - sorted(i - 1));
  return gap;
}

/// s[k+1] = S_k(x) for k = -1..upto.
std::vector<double> s_values(double x, int upto) {
  std::vector<double> s(static_cast<std::size_t>(upto) + 2, 0.0);
  s[1] = 1.0;
  for (int k = 1; k <= upto; ++k) s[static_cast<std::size_t>(k) + 1] = x * s[k] - s[static_cast<std::size_t>(k) - 1];
  return s;
}

double s_at(const std::vector<double>& s, int k) { return s[static_cast<std::size_t>(k + 1)]; }

/// Value and derivative of S_m(x) - lambda S_{ell-1}(x) S_{m-ell}(x) via the
/// three-term recurrence.
std::pair<double, double> factor_value(double x, double lambda, int m, int ell) {
  std::vector<double> s(static_cast<std::size_t>(m) + 2, 0.0), ds(s.size(), 0.0);
  s[1] = 1.0;
  for (int k = 1; k <= m; ++k) {
    const auto i = static_cast<std::size_t>(k) + 1;
    s[i] = x * s[i - 1] - s[i - 2];
    ds[i] = s[i - 1] + x * ds[i - 1] - ds[i - 2];
  }
  auto at = [](const std::vector<double>& v, int k) { return v[static_cast<std::size_t>(k + 1)]; };
  const double p = at(s, ell - 1) * at(s, m - ell);
  const double dp = at(ds, ell - 1) * at(s, m - ell) + at(s, ell - 1) * at(ds, m - ell);
  return {at(s, m) - lambda * p, at(ds, m) - lambda * dp};
}

/// Real roots of S_m - lambda S_{ell-1} S_{m-ell} from the eigenvalues of the
/// companion matrix of its monomial coefficients, polished by Newton steps.
std::vector<double> factor_roots(double lambda, int m, int ell) {
  const IntPolynomial sm = s_poly(m);
  const IntPolynomial coupling = s_poly(ell - 1) * s_poly(m - ell);
  std::vector<double> c(static_cast<std::size_t>(m) + 1, 0.0);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = sm.coeff(k).get_d() - lambda * coupling.coeff(k).get_d();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(m, m);
  for (int i = 1; i < m; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < m; ++i) companion(i, m - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<double> roots;
  for (Eigen::Index i = 0; i < m; ++i) {
    double x = solver.eigenvalues()(i).real();
    for (int iter = 0; iter < 4; ++iter) {
      const auto [v, dv] = factor_value(x, lambda, m, ell);
      if (dv == 0.0) break;
      const double step = v / dv;
      if (!std::isfinite(step) || std::abs(step) > 1e-3 * (1.0 + std::abs(x))) break;
      x -= step;
    }
    roots.push_back(x);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// The path part of eta: a_p = S_{ell-1} S_{m-p} - S_m S_{ell-p-1} (p <= ell),
/// S_{ell-1} S_{m-p} (p > ell), evaluated at mu.
std::vector<double> path_profile(double mu, int m, int ell) {
  const auto s = s_values(mu, m);
  std::vector<double> a(static_cast<std::size_t>(m));
  for (int p = 1; p <= m; ++p) {
    double v = s_at(s, ell - 1) * s_at(s, m - p);
    if (p <= ell) v -= s_at(s, m) * s_at(s, ell - p - 1);
    a[static_cast<std::size_t>(p - 1)] = v;
  }
  return a;
}

/// f_k(mu) for k = 1..m, from recurrence values.
std::vector<double> f_values(double mu, int m, int ell) {
  const auto s = s_values(mu, m);
  std::vector<double> f(static_cast<std::size_t>(m));
  for (int k = 1; k <= m; ++k) {
    double v = s_at(s, ell - 1) * s_at(s, m - k);
    if (k <= ell - 1) v -= s_at(s, m) * s_at(s, ell - k - 1);
    f[static_cast<std::size_t>(k - 1)] = v;
  }
  return f;
}

double abs_horner(const IntPolynomial& p, double x) {
  double acc = 0.0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * std::abs(x) + std::abs(it->get_d());
  return acc;
}

}  // namespace

EigenpairCheck numeric_eigenpairs(const Graph& g, int m, int ell, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("numeric_eigenpairs: tol must be positive");
  if (m < 2) throw std::invalid_argument("numeric_eigenpairs: m must be >= 2");
  const RootedProductSpec spec(m, ell);
  m = spec.m();
  ell = spec.ell();
  const auto n = static_cast<Eigen::Index>(g.order());

  EigenpairCheck out;
  VerificationReport& r = out.report;
  r.check = "eigenpairs";
  r.graph6 = graph6_encode(g);
  r.m = m;
  r.ell = ell;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(dense_adjacency(g));
  const Eigen::MatrixXd product = dense_adjacency(rooted_product_path(g, spec));
  const IntPolynomial s_poly_sum = s_sum_poly(m, ell);

  double worst = 0.0;
  double worst_sum = 0.0;
  std::size_t degenerate = 0;
  bool ok = true;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lambda = eig.eigenvalues()(i);
    const Eigen::VectorXd xi = eig.eigenvectors().col(i);
    for (double mu : factor_roots(lambda, m, ell)) {
      NumericEigenPair pair;
      pair.lambda = lambda;
      pair.xi.assign(xi.data(), xi.data() + n);
      pair.mu = mu;
      const auto profile = path_profile(mu, m, ell);
      Eigen::VectorXd eta(n * m);
      for (int p = 0; p < m; ++p) eta.segment(p * n, n) = profile[static_cast<std::size_t>(p)] * xi;
      pair.eta.assign(eta.data(), eta.data() + eta.size());
      const double eta_norm = eta.lpNorm<Eigen::Infinity>();
      pair.residual = (product * eta - mu * eta).lpNorm<Eigen::Infinity>();
      const double profile_norm =
          std::abs(*std::max_element(profile.begin(), profile.end(), [](double a, double b) { return std::abs(a) < std::abs(b); }));
      if (profile_norm <= 1e-10) {
        pair.degenerate = true;
        ++degenerate;
      } else {
        const double scaled = pair.residual / ((1.0 + std::abs(mu)) * eta_norm);
        worst = std::max(worst, scaled);
        if (scaled > tol) ok = false;
        // e^T eta against S(mu) e^T xi
        const double lhs_sum = eta.sum();
        const double rhs_sum = s_poly_sum(mu) * xi.sum();
        const double scale = std::max({1.0, eta.lpNorm<1>(), abs_horner(s_poly_sum, mu) * xi.lpNorm<1>()});
        const double sum_err = std::abs(lhs_sum - rhs_sum) / scale;
        worst_sum = std::max(worst_sum, sum_err);
        if (sum_err > tol) ok = false;
      }
      out.pairs.push_back(std::move(pair));
    }
  }
  r.lhs = sci(worst);
  r.rhs = sci(tol);
  r.status = ok ? Status::pass : Status::fail;
  r.detail = std::to_string(out.pairs.size()) + " pairs, " + std::to_string(degenerate) +
             " degenerate (eta = 0), worst e^T eta error " + sci(worst_sum);
  return out;
}

VerificationReport numeric_walkdet(const Graph& g, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("numeric_walkdet: tol must be positive");
  VerificationReport r;
  r.check = "walkdet_eigen";
  r.graph6 = graph6_encode(g);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(dense_adjacency(g));
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  const double gap = min_gap(lambda);
  if (gap < kMinEigengap) {
    r.detail = "hypothesis unmet: minimum eigengap " + sci(gap);
    return r;
  }
  const Eigen::MatrixXd& q = eig.eigenvectors();
  double value = 1.0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i)
    for (Eigen::Index j = i + 1; j < lambda.size(); ++j) value *= lambda(j) - lambda(i);
  for (Eigen::Index i = 0; i < lambda.size(); ++i) value *= q.col(i).sum();
  value /= q.determinant();

  const BigInt exact = walk_det(g);
  const double exact_d = exact.get_d();
  const double err = std::abs(value - exact_d) / std::max(1.0, std::abs(exact_d));
  r.lhs = to_decimal(exact);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  r.rhs = buf;
  if (sgn(exact) != 0 && std::abs(value) > 0.5) r.sign = sgn(exact) * (value > 0 ? 1 : -1);
  r.status = err <= tol ? Status::pass : Status::fail;
  r.detail = "relative error " + sci(err) + ", min eigengap " + sci(gap);
  return r;
}

VerificationReport numeric_fk_vandermonde(const Graph& g, int m, int ell, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("numeric_fk_vandermonde: tol must be positive");
  if (m < 2) throw std::invalid_argument("numeric_fk_vandermonde: m must be >= 2");
  const RootedProductSpec spec(m, ell);
  m = spec.m();
  ell = spec.ell();
  VerificationReport r;
  r.check = "fk_vandermonde";
  r.graph6 = graph6_encode(g);
  r.m = m;
  r.ell = ell;
  if (std::gcd(ell, m + 1) != 1) {
    r.detail = "hypothesis unmet: gcd(ell, m+1) = " + std::to_string(std::gcd(ell, m + 1));
    return r;
  }
  if (m > 8) {
    r.detail = "hypothesis unmet: m > 8";
    return r;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(dense_adjacency(g));
  const double gap = min_gap(eig.eigenvalues());
  if (gap < kMinEigengap) {
    r.detail = "hypothesis unmet: minimum eigengap " + sci(gap);
    return r;
  }
  double worst = 0.0;
  double worst_cond = 0.0;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
    const auto mu = factor_roots(eig.eigenvalues()(i), m, ell);
    Eigen::MatrixXd f(m, m);
    for (int j = 0; j < m; ++j) {
      const auto col = f_values(mu[static_cast<std::size_t>(j)], m, ell);
      for (int k = 0; k < m; ++k) f(k, j) = col[static_cast<std::size_t>(k)];
    }
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(f);
    const double cond = svd.singularValues()(0) / svd.singularValues()(m - 1);
    worst_cond = std::max(worst_cond, cond);
    if (!std::isfinite(cond) || cond > 1e12) {
      r.status = Status::skip;
      r.detail = "ill-conditioned: cond(F) = " + sci(cond);
      return r;
    }
    double vandermonde = 1.0;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) vandermonde *= mu[static_cast<std::size_t>(b)] - mu[static_cast<std::size_t>(a)];
    const double det = f.fullPivLu().determinant();
    const double err = std::abs(std::abs(det) - std::abs(vandermonde)) / std::abs(vandermonde);
    worst = std::max(worst, err);
  }
  r.lhs = sci(worst);
  r.rhs = sci(tol);
  r.status = worst <= tol ? Status::pass : Status::fail;
  r.detail = "worst relative error over " + std::to_string(eig.eigenvalues().size()) +
             " eigenvalues; max cond(F) " + sci(worst_cond);
  return r;
}

}  // namespace walkmat
