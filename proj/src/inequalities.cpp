#include "alphakit/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "alphakit/quadrature.hpp"

namespace alphakit {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kSqrt3 = std::numbers::sqrt3;

double wrap(double phi) {
  double r = std::fmod(phi, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r >= kTwoPi ? 0.0 : r;
}

double square(double v) { return v * v; }

// (1 - Re b(p+v) conj b(p-v)) / 2 at p.
double j_integrand(const BoundaryFunction& b, double p, double v) {
  return 0.5 * (1.0 - std::real(b.value(p + v) * std::conj(b.value(p - v))));
}

// Kinks of J(v) on [lo, hi] for a step phase: J is piecewise linear with
// breaks where two shifted arc starts collide, v = (a_i - a_j)/2 mod pi.
std::vector<double> j_kinks(const BoundaryFunction& b, double lo, double hi) {
  std::vector<double> out{lo, hi};
  const auto starts = b.breakpoints();
  for (double ai : starts) {
    for (double aj : starts) {
      double v = std::fmod(0.5 * (ai - aj), kPi);
      if (v < 0.0) v += kPi;
      for (double cand : {v, v - kPi, v + kPi}) {
        if (cand > lo && cand < hi) out.push_back(cand);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](double x, double y) { return std::abs(x - y) < 1e-14; }),
            out.end());
  return out;
}

}  // namespace

double heinz_bound() { return 27.0 / (4.0 * kPi * kPi); }

HeinzReport heinz_functional(AlphaParameter alpha, Complex c1, Complex c0, Complex c_neg1,
                             double tol) {
  HeinzReport r;
  r.c1 = c1;
  r.c0 = c0;
  r.c_neg1 = c_neg1;
  r.functional_value =
      std::norm(c1) + 3.0 * kSqrt3 / kPi * std::norm(c0) + std::norm(c_neg1) / square(alpha + 1.0);
  r.bound = heinz_bound();
  r.gap = r.functional_value - r.bound;
  r.passed = r.gap >= -tol;
  return r;
}

HeinzReport heinz_from_boundary(AlphaParameter alpha, const BoundaryFunction& b, double tol) {
  if (!b.is_unit_modulus()) throw std::invalid_argument("Heinz check needs unit-modulus boundary data");
  if (!b.is_admissible()) throw std::invalid_argument("Heinz check needs an admissible boundary");
  return heinz_functional(alpha, fourier_coefficient_pos(b, 1), fourier_coefficient_pos(b, 0),
                          fourier_coefficient_neg(alpha, b, 1), tol);
}

double j_functional(const BoundaryFunction& b, double varphi, const EvalPolicy& policy) {
  const auto starts = b.breakpoints();
  if (starts.empty()) {
    auto f = [&](double p) { return j_integrand(b, p, varphi); };
    return periodic_mean(f, policy.rel_tol);
  }
  // Both shifted copies are smooth between the shifted breakpoints; on step
  // data the integrand is constant there, on samples a low-degree polynomial.
  std::vector<double> cuts{0.0, kTwoPi};
  for (double a : starts) {
    cuts.push_back(wrap(a - varphi));
    cuts.push_back(wrap(a + varphi));
  }
  std::sort(cuts.begin(), cuts.end());
  const auto& rule = gauss_legendre(4);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] - cuts[i] <= 0.0) continue;
    total += gauss_panel([&](double p) { return j_integrand(b, p, varphi); }, cuts[i], cuts[i + 1], rule);
  }
  return std::clamp(total / kTwoPi, 0.0, 1.0);
}

double n_function(double varphi) {
  constexpr double period = kPi / 3.0;
  double v = std::fmod(std::abs(varphi), period);
  if (v > period / 2.0) v = period - v;
  return square(std::cos(kPi / 3.0 + v));
}

double m_function(double varphi) {
  if (!(varphi >= 0.0 && varphi <= kPi / 2.0)) throw DomainError("M is defined on [0, pi/2]");
  if (varphi <= kPi / 6.0) return square(std::cos(varphi)) - square(std::cos(kPi / 3.0 + varphi));
  if (varphi <= kPi / 3.0) return square(std::cos(varphi)) - square(std::cos(2.0 * kPi / 3.0 - varphi));
  return 0.0;
}

double n_fourier_series(double varphi, int terms) {
  double sum = 0.0;
  // Smallest terms first.
  for (int k = terms; k >= 1; --k) sum += std::cos(6.0 * k * varphi) / (9.0 * k * k - 1.0);
  return 0.5 - 3.0 * kSqrt3 / (4.0 * kPi) + 3.0 * kSqrt3 / (2.0 * kPi) * sum;
}

double n_fourier_check(const EvalPolicy& /*policy*/, int terms, int grid_intervals) {
  if (grid_intervals < 1 || terms < 0) throw std::invalid_argument("n_fourier_check: bad grid");
  double worst = 0.0;
  for (int i = 0; i <= grid_intervals; ++i) {
    const double v = 0.5 * kPi * i / grid_intervals;
    worst = std::max(worst, std::abs(n_function(v) - n_fourier_series(v, terms)));
  }
  return worst;
}

double m_integral(const EvalPolicy& policy) {
  const auto& rule = gauss_legendre(std::max(policy.quadrature_order, 16));
  auto m = [](double v) { return m_function(v); };
  // M is smooth on each piece; the last piece vanishes identically.
  return adaptive_gauss(m, 0.0, kPi / 6.0, 1e-16, policy.rel_tol, rule) +
         adaptive_gauss(m, kPi / 6.0, kPi / 3.0, 1e-16, policy.rel_tol, rule) +
         gauss_panel(m, kPi / 3.0, kPi / 2.0, rule);
}

double m_integral_check(const EvalPolicy& policy) {
  return std::abs(m_integral(policy) - 3.0 * kSqrt3 / 8.0);
}

double mj_integral(const BoundaryFunction& b, const EvalPolicy& policy) {
  // M vanishes on [pi/3, pi/2].
  auto f = [&](double v) { return m_function(v) * j_functional(b, v, policy); };
  double total = 0.0;
  if (b.as_step()) {
    const auto& rule = gauss_legendre(16);
    for (auto [lo, hi] : {std::pair{0.0, kPi / 6.0}, std::pair{kPi / 6.0, kPi / 3.0}}) {
      const auto cuts = j_kinks(b, lo, hi);
      for (std::size_t i = 0; i + 1 < cuts.size(); ++i) total += gauss_panel(f, cuts[i], cuts[i + 1], rule);
    }
  } else {
    const auto& rule = gauss_legendre(16);
    total = adaptive_gauss(f, 0.0, kPi / 6.0, 1e-13, policy.rel_tol, rule) +
            adaptive_gauss(f, kPi / 6.0, kPi / 3.0, 1e-13, policy.rel_tol, rule);
  }
  return 16.0 / kPi * total;
}

double mj_inequality_check(const BoundaryFunction& b, const EvalPolicy& policy) {
  if (!b.is_admissible()) throw std::invalid_argument("MJ inequality needs an admissible boundary");
  return mj_integral(b, policy) - (3.0 * kSqrt3 / kPi - heinz_bound());
}

double spectral_identity_check(AlphaParameter alpha, const BoundaryFunction& b, double varphi,
                               int truncation, const EvalPolicy& policy) {
  const auto s = spectrum_from_boundary(alpha, b, truncation);
  const double lhs = 1.0 - 2.0 * j_functional(b, varphi, policy);
  double rhs = std::norm(s[0]);
  for (int k = 1; k <= truncation; ++k) {
    const double bk = beta_fn(k, alpha + 1.0);
    rhs += (std::norm(s[k]) + std::norm(s[-k]) * bk * bk) * std::cos(2.0 * k * varphi);
  }
  return std::abs(lhs - rhs);
}

double parseval_deficit(const BoundaryFunction& b, int truncation) {
  double sum = 0.0;
  for (int k = -truncation; k <= truncation; ++k) sum += std::norm(fourier_coefficient(b, k));
  return 1.0 - sum;
}

std::string to_string(RigidityVerdict v) {
  switch (v) {
    case RigidityVerdict::rotation_forced: return "rotation_forced";
    case RigidityVerdict::constraint_violated: return "constraint_violated";
    case RigidityVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

RigidityReport schwarz_rigidity(const CoefficientSpectrum& s, RigidityMode mode, double tol) {
  RigidityReport r;
  const double a1 = s.alpha() + 1.0;
  for (int k = 1; k <= s.truncation(); ++k) {
    const double bk = beta_fn(k, a1);
    r.parseval_sum += std::norm(s[k]) + std::norm(s[-k]) * bk * bk;
  }
  r.j0 = std::norm(s[1]) - std::norm(s[-1]);
  r.lambda0 = std::abs(std::abs(s[1]) - std::abs(s[-1]));

  if (r.parseval_sum > 1.0 + tol) {
    r.verdict = RigidityVerdict::constraint_violated;
    return r;
  }
  const bool hypothesis = mode == RigidityMode::jacobian ? std::abs(r.j0 - 1.0) <= tol
                                                         : std::abs(r.lambda0 - 1.0) <= tol;
  if (!hypothesis) {
    r.verdict = RigidityVerdict::inconclusive;
    return r;
  }
  // Forced shape: |c1| = 1 and every other coefficient (c0 included) zero.
  bool rotation = std::abs(std::abs(s[1]) - 1.0) <= tol;
  for (int k = -s.truncation(); k <= s.truncation() && rotation; ++k) {
    if (k != 1 && std::abs(s[k]) > tol) rotation = false;
  }
  r.verdict = rotation ? RigidityVerdict::rotation_forced : RigidityVerdict::constraint_violated;
  return r;
}

bool TypicallyRealReport::all_passed() const {
  return gate_passed && std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.passed; });
}

TypicallyRealReport typically_real_bound_check(const CoefficientSpectrum& s) {
  TypicallyRealReport report;
  const double alpha = s.alpha();
  const double a1 = alpha + 1.0;
  if (!s.all_real(1e-12)) {
    report.gate_reason = "coefficients are not all real";
    return report;
  }
  if (std::abs(s[1] - 1.0) > 1e-12) {
    report.gate_reason = "normalization c1 = 1 does not hold";
    return report;
  }
  const double cm1 = s[-1].real();
  if (alpha >= 0.0 ? !(std::abs(cm1) < 1.0) : !(std::abs(cm1) < a1)) {
    report.gate_reason = alpha >= 0.0 ? "|c_{-1}| < 1 fails for alpha >= 0"
                                      : "|c_{-1}| < 1 + alpha fails for alpha < 0";
    return report;
  }
  const double denom = 1.0 - cm1 * beta_fn(1, a1);
  if (!(denom > 0.0)) {
    report.gate_reason = "denominator 1 - c_{-1} B(1, alpha+1) is not positive";
    return report;
  }
  report.gate_passed = true;
  for (int k = 2; k <= s.truncation(); ++k) {
    TypicallyRealRow row;
    row.k = k;
    row.ratio = std::abs((s[k].real() - s[-k].real() * beta_fn(k, a1)) / denom);
    row.bound = k;
    row.passed = row.ratio <= k + 1e-10;
    report.rows.push_back(row);
  }
  return report;
}

double sine_ratio(int k, double theta) {
  if (k < 1) throw std::invalid_argument("sine_ratio needs k >= 1");
  const double x = std::cos(theta);
  double prev = 1.0;       // U_0
  double cur = 2.0 * x;    // U_1
  if (k == 1) return prev;
  for (int n = 2; n < k; ++n) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double difference_quotient(const CoefficientSpectrum& s, double r, double theta,
                           const EvalPolicy& policy) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("difference_quotient needs 0 < r < 1");
  if (!s.all_real(1e-12)) throw std::invalid_argument("difference_quotient needs real coefficients");
  const double x = std::cos(theta);
  const double x2 = r * r;
  double sum = 0.0;
  double rk1 = 1.0;     // r^{k-1}
  double u_prev = 0.0;  // U_{k-2}
  double u_cur = 1.0;   // U_{k-1}
  for (int k = 1; k <= s.truncation(); ++k) {
    double coeff = s[k].real();
    if (s[-k] != Complex{}) coeff -= s[-k].real() * p_alpha_k(s.alpha(), k, x2, policy);
    sum += coeff * rk1 * u_cur;
    const double u_next = 2.0 * x * u_cur - u_prev;
    u_prev = u_cur;
    u_cur = u_next;
    rk1 *= r;
  }
  return sum;
}

std::pair<double, double> dirichlet_ratio_extrema(int k) {
  if (k < 2) throw std::invalid_argument("dirichlet_ratio_extrema needs k >= 2");
  auto f = [k](double t) { return sine_ratio(k, t); };
  const int grid = 400 * k;
  double lo = std::min(f(0.0), f(kPi));
  double hi = std::max(f(0.0), f(kPi));
  // Golden-section polish of every interior grid extremum.
  auto polish = [&](double a, double b, bool minimize) {
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - g * (b - a);
    double d = a + g * (b - a);
    for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
      const bool left = minimize ? f(c) < f(d) : f(c) > f(d);
      if (left) {
        b = d;
      } else {
        a = c;
      }
      c = b - g * (b - a);
      d = a + g * (b - a);
    }
    return f(0.5 * (a + b));
  };
  double prev = f(0.0);
  double cur = f(kPi / grid);
  for (int i = 1; i < grid; ++i) {
    const double next = f(kPi * (i + 1) / grid);
    const double a = kPi * (i - 1) / grid;
    const double b = kPi * (i + 1) / grid;
    if (cur <= prev && cur <= next) lo = std::min(lo, polish(a, b, true));
    if (cur >= prev && cur >= next) hi = std::max(hi, polish(a, b, false));
    prev = cur;
    cur = next;
  }
  return {lo, hi};
}

}  // namespace alphakit
