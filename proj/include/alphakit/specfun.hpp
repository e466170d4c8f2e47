#pragma once

// Special functions for the weighted Laplacian family: Gamma, Beta, digamma,
// the coefficient integrals P_{alpha,k}(x) and their x-derivative.

#include <stdexcept>
#include <string>

namespace alphakit {

/// Raised when an argument falls outside the mathematical domain of an
/// operation (alpha <= -1, |z| >= 1, x <= 0 for Gamma, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an iterative evaluator exhausts its budget before reaching
/// the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Weight exponent of the standard weight (1-|z|^2)^alpha. Always > -1.
class AlphaParameter {
 public:
  explicit AlphaParameter(double alpha);

  double value() const noexcept { return alpha_; }
  operator double() const noexcept { return alpha_; }

 private:
  double alpha_;
};

struct EvalPolicy {
  double rel_tol = 1e-12;
  int max_terms = 10'000;
  int quadrature_order = 64;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

double gamma_fn(double x);
/// log Gamma(x) for x > 0; usable past the overflow point of gamma_fn.
double log_gamma_fn(double x);
double beta_fn(double a, double b);
double digamma_fn(double x);

/// Generalized binomial coefficient C(a, j) by the product recurrence.
double binomial_coefficient(double a, int j);

/// P_{alpha,k}(x) = int_0^1 t^{k-1} (1 - t x)^alpha dt, 0 <= x < 1.
///
/// Uses the binomial series and falls back to graded Gauss-Legendre
/// quadrature when the series cannot certify rel_tol within max_terms.
double p_alpha_k(AlphaParameter alpha, int k, double x, const EvalPolicy& policy = {});

/// Series route only: sum_j C(alpha,j) (-x)^j / (k+j). Throws
/// ConvergenceError if the rigorous tail bound does not reach rel_tol.
double p_alpha_k_series(AlphaParameter alpha, int k, double x, const EvalPolicy& policy = {});

/// Quadrature route only, with panels graded geometrically toward t = 1.
double p_alpha_k_quadrature(AlphaParameter alpha, int k, double x,
                            const EvalPolicy& policy = {});

/// Limit value P_{alpha,k}(1) = B(k, alpha+1).
double p_alpha_k_at_one(AlphaParameter alpha, int k);

/// d/dx P_{alpha,k}(x) = -alpha int_0^1 t^k (1 - t x)^{alpha-1} dt.
double p_alpha_k_prime(AlphaParameter alpha, int k, double x, const EvalPolicy& policy = {});
double p_alpha_k_prime_series(AlphaParameter alpha, int k, double x,
                              const EvalPolicy& policy = {});
double p_alpha_k_prime_quadrature(AlphaParameter alpha, int k, double x,
                                  const EvalPolicy& policy = {});

/// g(alpha) = Gamma(alpha+1) / Gamma(alpha/2+1)^2.
double g_ratio(AlphaParameter alpha);

}  // namespace alphakit
