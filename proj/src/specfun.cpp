#include "alphakit/specfun.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "alphakit/quadrature.hpp"

namespace alphakit {

AlphaParameter::AlphaParameter(double alpha) : alpha_(alpha) {
  if (!(alpha > -1.0) || !std::isfinite(alpha)) {
    throw DomainError("alpha must be a finite value > -1, got " + std::to_string(alpha));
  }
}

void EvalPolicy::validate() const {
  if (!(rel_tol > 0.0)) throw std::invalid_argument("EvalPolicy: rel_tol must be > 0");
  if (max_terms < 1) throw std::invalid_argument("EvalPolicy: max_terms must be >= 1");
  if (quadrature_order < 2) {
    throw std::invalid_argument("EvalPolicy: quadrature_order must be >= 2");
  }
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Largest argument with a finite double Gamma value.
constexpr double kGammaOverflow = 171.0;

void require_positive(double x, const char* what) {
  if (!(x > 0.0)) throw DomainError(std::string(what) + ": argument must be > 0");
}

void require_unit_interval(double x, int k) {
  if (!(x >= 0.0 && x < 1.0)) throw DomainError("P_{alpha,k}: x must lie in [0, 1)");
  if (k < 1) throw DomainError("P_{alpha,k}: k must be >= 1");
}

// sum_{j>=0} C(beta, j) (-x)^j / (offset + j), with a rigorous truncation
// criterion. Once j > beta the term ratios are bounded by
// rho = x * max(1, (j - beta)/(j + 1)) for every later index, so the
// remaining tail is at most |term| * rho / (1 - rho). For beta <= 0 every
// term has the same sign.
std::optional<double> binomial_moment_series(double beta, double x, int offset,
                                             const EvalPolicy& policy) {
  double coeff = 1.0;
  double sum = 1.0 / offset;
  double sum_abs = std::abs(sum);
  if (x == 0.0) return sum;
  auto certified = [&](double tail) -> std::optional<double> {
    if (tail > policy.rel_tol * std::abs(sum)) return std::nullopt;
    // Rounding error of the accumulated sum must also fit in the budget.
    if (4.0 * kEps * sum_abs > policy.rel_tol * std::abs(sum)) return std::nullopt;
    return sum;
  };
  for (int j = 1; j <= policy.max_terms; ++j) {
    coeff *= (beta - (j - 1)) / j * (-x);
    if (coeff == 0.0) {
      // beta is a nonnegative integer: the series terminated.
      if (auto v = certified(0.0)) return v;
      return std::nullopt;
    }
    const double term = coeff / (offset + j);
    sum += term;
    sum_abs += std::abs(term);
    if (j > beta) {
      const double rho = x * std::max(1.0, (j - beta) / (j + 1.0));
      if (rho < 1.0) {
        if (auto v = certified(std::abs(term) * rho / (1.0 - rho))) return v;
      }
    }
  }
  return std::nullopt;
}

// Same moment for beta > 0 after the Euler transformation of
// (1/m) 2F1(-beta, m; m+1; x):
//   (1 - x)^{beta+1} / m * sum_j (m+1+beta)_j / (m+1)_j x^j,
// whose terms are positive. The term ratio x (m+1+beta+j)/(m+1+j) decreases
// in j, so once it drops below 1 it bounds every later ratio.
std::optional<double> euler_moment_series(double beta, double x, int offset,
                                          const EvalPolicy& policy) {
  const double m = offset;
  double term = 1.0;
  double sum = 1.0;
  for (int j = 0; j < policy.max_terms; ++j) {
    const double rho = x * (m + 1.0 + beta + j) / (m + 1.0 + j);
    term *= rho;
    sum += term;
    if (rho < 1.0 && term * rho / (1.0 - rho) <= 0.1 * policy.rel_tol * sum) {
      return std::pow(1.0 - x, beta + 1.0) / m * sum;
    }
  }
  return std::nullopt;
}

// int_0^1 t^{offset-1} (1 - t x)^beta dt by whichever series is free of
// cancellation.
std::optional<double> moment_series(double beta, double x, int offset, const EvalPolicy& policy) {
  if (beta <= 0.0 || x == 0.0) return binomial_moment_series(beta, x, offset, policy);
  // Integer beta: the binomial series is a short polynomial, exact when its
  // rounding check passes.
  if (beta == std::floor(beta) && beta < 64.0) {
    if (auto v = binomial_moment_series(beta, x, offset, policy)) return v;
  }
  return euler_moment_series(beta, x, offset, policy);
}

// int_0^1 t^power (1 - t x)^expo dt on panels graded toward t = 1, where
// the integrand approaches its (near-)singularity at t = 1/x.
double graded_integral(int power, double expo, double x, const EvalPolicy& policy) {
  const auto& rule = gauss_legendre(policy.quadrature_order);
  auto f = [&](double t) { return std::pow(t, power) * std::pow(1.0 - t * x, expo); };
  const double gap = 1.0 - x;
  int levels = 1;
  while (levels < 60 && std::ldexp(1.0, -levels) > gap) ++levels;
  std::vector<double> breaks{0.0};
  for (int i = 1; i <= levels; ++i) breaks.push_back(1.0 - std::ldexp(1.0, -i));
  breaks.push_back(1.0);

  double rough = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    rough += gauss_panel(f, breaks[i], breaks[i + 1], rule);
  }
  const double abs_tol = 1e-2 * policy.rel_tol * std::abs(rough) / breaks.size();
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    total += adaptive_gauss(f, breaks[i], breaks[i + 1], abs_tol, 0.25 * policy.rel_tol, rule);
  }
  return total;
}

}  // namespace

double gamma_fn(double x) {
  require_positive(x, "gamma_fn");
  return std::tgamma(x);
}

double log_gamma_fn(double x) {
  require_positive(x, "log_gamma_fn");
  return std::lgamma(x);
}

double beta_fn(double a, double b) {
  require_positive(a, "beta_fn");
  require_positive(b, "beta_fn");
  if (a + b < kGammaOverflow) return std::tgamma(a) * std::tgamma(b) / std::tgamma(a + b);
  return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

double digamma_fn(double x) {
  require_positive(x, "digamma_fn");
  double shift = 0.0;
  while (x < 10.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  // Asymptotic expansion with Bernoulli numbers B_2 .. B_14.
  const double series =
      inv2 * (1.0 / 12 -
              inv2 * (1.0 / 120 -
                      inv2 * (1.0 / 252 -
                              inv2 * (1.0 / 240 - inv2 * (1.0 / 132 - inv2 * (691.0 / 32760 - inv2 / 12))))));
  return shift + std::log(x) - 0.5 / x - series;
}

double binomial_coefficient(double a, int j) {
  if (j < 0) return 0.0;
  double c = 1.0;
  for (int i = 1; i <= j; ++i) c *= (a - i + 1) / i;
  return c;
}

double p_alpha_k_series(AlphaParameter alpha, int k, double x, const EvalPolicy& policy) {
  require_unit_interval(x, k);
  policy.validate();
  if (auto v = moment_series(alpha, x, k, policy)) return *v;
  throw ConvergenceError("P_{alpha,k} series did not reach rel_tol within max_terms");
}

double p_alpha_k_quadrature(AlphaParameter alpha, int k, double x, const EvalPolicy& policy) {
  require_unit_interval(x, k);
  policy.validate();
  return graded_integral(k - 1, alpha, x, policy);
}

double p_alpha_k(AlphaParameter alpha, int k, double x, const EvalPolicy& policy) {
  require_unit_interval(x, k);
  policy.validate();
  if (auto v = moment_series(alpha, x, k, policy)) return *v;
  return graded_integral(k - 1, alpha, x, policy);
}

double p_alpha_k_at_one(AlphaParameter alpha, int k) {
  if (k < 1) throw DomainError("P_{alpha,k}(1): k must be >= 1");
  return beta_fn(k, alpha + 1.0);
}

double p_alpha_k_prime_series(AlphaParameter alpha, int k, double x, const EvalPolicy& policy) {
  require_unit_interval(x, k);
  policy.validate();
  if (alpha.value() == 0.0) return 0.0;
  if (auto v = moment_series(alpha - 1.0, x, k + 1, policy)) return -alpha * *v;
  throw ConvergenceError("P'_{alpha,k} series did not reach rel_tol within max_terms");
}

double p_alpha_k_prime_quadrature(AlphaParameter alpha, int k, double x,
                                  const EvalPolicy& policy) {
  require_unit_interval(x, k);
  policy.validate();
  if (alpha.value() == 0.0) return 0.0;
  return -alpha * graded_integral(k, alpha - 1.0, x, policy);
}

double p_alpha_k_prime(AlphaParameter alpha, int k, double x, const EvalPolicy& policy) {
  require_unit_interval(x, k);
  policy.validate();
  if (alpha.value() == 0.0) return 0.0;
  if (auto v = moment_series(alpha - 1.0, x, k + 1, policy)) return -alpha * *v;
  return -alpha * graded_integral(k, alpha - 1.0, x, policy);
}

double g_ratio(AlphaParameter alpha) {
  const double a = alpha + 1.0;
  const double h = 0.5 * alpha + 1.0;
  if (a < kGammaOverflow) {
    const double gh = std::tgamma(h);
    return std::tgamma(a) / (gh * gh);
  }
  return std::exp(std::lgamma(a) - 2.0 * std::lgamma(h));
}

}  // namespace alphakit
