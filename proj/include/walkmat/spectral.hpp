#pragma once

#include <vector>

#include "walkmat/graph.hpp"
#include "walkmat/polynomial.hpp"
#include "walkmat/report.hpp"

namespace walkmat {

/// det(xI - A(g)).
IntPolynomial characteristic_polynomial(const Graph& g);

/// prod over the roots lambda_i of phi_g of (S_m - lambda_i S_{ell-1} S_{m-ell}),
/// computed exactly as Res_lambda(phi_g(lambda), S_m(x) - lambda S_{ell-1}(x) S_{m-ell}(x))
/// with the eigenvalues eliminated symbolically. phi_g must be monic.
IntPolynomial charpoly_from_factorization(const IntPolynomial& phi_g, int m, int ell);

// Exact checks. All take 2 <= m and 1 <= ell <= (m+1)/2 (or ell <= m, mirrored),
// and throw std::invalid_argument otherwise.

/// |det W(G o P_m^(ell))| = |det A(G)|^floor(m/2) |det W(G)|^m when
/// gcd(ell, m+1) = 1, and det W(G o P_m^(ell)) = 0 otherwise. Needs n >= 2.
VerificationReport verify_main(const Graph& g, int m, int ell);

/// phi(G o P_m^(ell)) = prod_i (S_m - lambda_i S_{ell-1} S_{m-ell}), both
/// sides exact in Z[x].
VerificationReport verify_charpoly_factorization(const Graph& g, int m, int ell);

/// For G with simple spectrum and n >= 2: phi(G o P_m^(ell)) is square-free
/// iff gcd(ell, m+1) = 1. Skips when the hypotheses fail.
VerificationReport verify_simple_spectrum_iff(const Graph& g, int m, int ell);

/// gcd(phi(H), phi(H - v)) = 1, with v 1-based.
bool wronskian_vertex(const Graph& h, std::size_t v);

// Floating-point checks of the eigenvector construction.

struct Tolerances {
  double residual = 1e-8;
  double relative = 1e-6;
};

/// One eigenpair (lambda, xi) of G, a root mu of S_m - lambda S_{ell-1} S_{m-ell},
/// and the eigenvector eta of G o P_m^(ell) built from them.
struct NumericEigenPair {
  double lambda = 0.0;
  std::vector<double> xi;
  double mu = 0.0;
  std::vector<double> eta;
  double residual = 0.0;  ///< ||A eta - mu eta||_inf
  bool degenerate = false;
};

struct EigenpairCheck {
  std::vector<NumericEigenPair> pairs;
  VerificationReport report;
};

/// Builds all mn pairs and checks ||A eta - mu eta||_inf <= tol (1+|mu|) ||eta||_inf
/// and e^T eta = S(mu) e^T xi.
EigenpairCheck numeric_eigenpairs(const Graph& g, int m, int ell, double tol = 1e-8);

/// det W(G) from eigenvalues and orthonormal eigenvectors compared with the
/// exact value. Skips when the minimum eigengap is below 1e-6.
VerificationReport numeric_walkdet(const Graph& g, double tol = 1e-6);

/// For every eigenvalue lambda_i of G: |det(f_k(mu_i^(j)))| equals the
/// Vandermonde product of the mu_i^(j). Needs gcd(ell, m+1) = 1, simple
/// spectrum and m <= 8.
VerificationReport numeric_fk_vandermonde(const Graph& g, int m, int ell, double tol = 1e-6);

}  // namespace walkmat
