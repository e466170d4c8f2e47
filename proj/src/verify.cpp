#include "alphakit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "alphakit/alphamap.hpp"
#include "alphakit/boundary.hpp"
#include "alphakit/inequalities.hpp"
#include "alphakit/kernel.hpp"
#include "alphakit/random.hpp"
#include "alphakit/render.hpp"
#include "alphakit/specfun.hpp"

namespace alphakit {
namespace {

using std::numbers::pi;

const double kSqrt3 = std::sqrt(3.0);

class Suite {
 public:
  explicit Suite(const VerifyConfig& c) : config_(c), rng_(c.seed) {}

  double band(double tol) const { return std::max(tol, config_.tol); }

  void at_most(std::string name, double value, double bound, double tol, std::string note = {}) {
    report_.add(std::move(name), value, bound, band(tol), Relation::at_most, true, std::move(note));
  }
  void at_least(std::string name, double value, double bound, double tol, std::string note = {}) {
    report_.add(std::move(name), value, bound, band(tol), Relation::at_least, true, std::move(note));
  }

  std::vector<double> alphas(std::vector<double> defaults) const {
    if (config_.alpha) return {*config_.alpha};
    return defaults;
  }

  std::uint64_t next_seed() { return static_cast<std::uint64_t>(rng_.uniform() * 0x1.0p53); }

  SeededRandom& rng() { return rng_; }
  const VerifyConfig& config() const { return config_; }
  VerificationReport& report() { return report_; }

 private:
  VerifyConfig config_;
  SeededRandom rng_;
  VerificationReport report_;
};

Complex random_disk_point(SeededRandom& rng, double r_max) {
  const double r = r_max * std::sqrt(rng.uniform());
  return std::polar(r, rng.uniform(0.0, 2.0 * pi));
}

CoefficientSpectrum random_spectrum(SeededRandom& rng, AlphaParameter alpha, int max_k) {
  const int k_max = rng.integer(1, max_k);
  CoefficientSpectrum s(alpha, k_max);
  for (int k = -k_max; k <= k_max; ++k) s.set(k, {rng.uniform(-1, 1), rng.uniform(-1, 1)});
  return s;
}

void heinz_checks(Suite& suite) {
  const auto b = extremal_triple_step();
  const double c1_exact = 3.0 * kSqrt3 / (2.0 * pi);
  double gap = 0.0, c1_err = 0.0, c0_c1m = 0.0;
  for (double a : suite.alphas({-0.5, 0.0, 1.0, 2.5})) {
    const AlphaParameter alpha(a);
    const auto r = heinz_from_boundary(alpha, b);
    gap = std::max(gap, std::abs(r.gap));
    c1_err = std::max(c1_err, std::abs(r.c1 - c1_exact));
    c0_c1m = std::max({c0_c1m, std::abs(r.c0), std::abs(r.c_neg1)});
  }
  suite.at_most("heinz_sharpness", gap, 0.0, 1e-12);
  suite.at_most("heinz_sharpness_c1", c1_err, 0.0, 1e-12);
  suite.at_most("heinz_sharpness_c0_cneg1", c0_c1m, 0.0, 1e-14);

  double worst = HUGE_VAL;
  for (int i = 0; i < 200; ++i) {
    const auto step = random_admissible_step(suite.rng().integer(2, 12), suite.next_seed());
    for (double a : suite.alphas({-0.5, 0.0, 1.0, 2.5})) {
      worst = std::min(worst, heinz_from_boundary(AlphaParameter(a), step).gap);
    }
  }
  suite.at_least("heinz_lower_bound_random", worst, 0.0, 1e-10, "minimum gap over 200 boundaries");
}

void auxiliary_checks(Suite& suite, const EvalPolicy& policy) {
  suite.at_most("m_integral", m_integral_check(policy), 0.0, 1e-10);

  double worst = -HUGE_VAL;
  for (int i = 0; i < 100; ++i) {
    const auto step = random_admissible_step(suite.rng().integer(2, 10), suite.next_seed());
    worst = std::max(worst, mj_inequality_check(step, policy));
  }
  suite.at_most("mj_inequality", worst, 0.0, 1e-8, "max LHS - RHS over 100 boundaries");

  suite.at_most("n_fourier_expansion", n_fourier_check(policy, 200), 0.0, 1e-4,
                "sup |N - S_200 N| on a grid containing the kinks");

  const auto identity = BoundaryFunction::trig_poly({{1, Complex(1.0, 0.0)}});
  double id_err = 0.0;
  for (double a : suite.alphas({-0.5, 0.0, 1.0, 2.5})) {
    for (int i = 0; i < 10; ++i) {
      id_err = std::max(id_err, spectral_identity_check(AlphaParameter(a), identity,
                                                        suite.rng().uniform(0.0, pi), 128, policy));
    }
  }
  suite.at_most("spectral_identity_identity", id_err, 0.0, 1e-12);

  const auto extremal = extremal_triple_step();
  double ex_err = 0.0;
  for (double a : suite.alphas({-0.5, 0.0, 1.0, 2.5})) {
    for (int i = 0; i < 10; ++i) {
      ex_err = std::max(ex_err, spectral_identity_check(AlphaParameter(a), extremal,
                                                        suite.rng().uniform(0.1, 1.4), 128, policy));
    }
  }
  suite.at_most("spectral_identity_extremal", ex_err, 0.0, 1e-3, "K = 128");
}

void solver_checks(Suite& suite, const EvalPolicy& policy) {
  double err = 0.0;
  for (double a : suite.alphas({-0.5, 0.0, 1.0, 2.5})) {
    const AlphaParameter alpha(a);
    for (int m = -5; m <= 5; ++m) {
      if (m == 0) continue;
      const auto b = BoundaryFunction::trig_poly({{m, Complex(1.0, 0.0)}});
      for (int i = 0; i < 20; ++i) {
        const DiskPoint z(random_disk_point(suite.rng(), 0.9));
        err = std::max(err, std::abs(solve_dirichlet(alpha, b, z, policy) -
                                     kernel_expansion_term(alpha, m, z, policy)));
      }
    }
  }
  suite.at_most("solver_pure_modes", err, 0.0, 1e-8);
}

void specfun_checks(Suite& suite, const EvalPolicy& policy) {
  const std::vector<double> grid = {-0.9, -0.5, -0.1, 0.0, 0.5, 1.0, 1.5, 3.0, 7.5};

  // B(k, a+1) = (k-1)! / ((a+1)(a+2)...(a+k)) for integer k.
  double beta_err = 0.0;
  for (double a : grid) {
    double product = 1.0;
    for (int k = 1; k <= 20; ++k) {
      product *= (a + k) / k;
      const double closed = 1.0 / (k * product);
      beta_err = std::max(beta_err, std::abs(p_alpha_k_at_one(AlphaParameter(a), k) / closed - 1.0));
    }
  }
  suite.at_most("p_at_one_vs_beta", beta_err, 0.0, 1e-10, "relative error, k <= 20");

  double route_err = 0.0;
  double fd_err = 0.0;
  const double h = 1e-5;
  for (double a : grid) {
    const AlphaParameter alpha(a);
    for (int k : {1, 2, 5, 10, 20}) {
      for (double x : {0.0, 0.3, 0.7, 0.9, 0.99}) {
        const double s = p_alpha_k_series(alpha, k, x, policy);
        const double q = p_alpha_k_quadrature(alpha, k, x, policy);
        route_err = std::max(route_err, std::abs(s - q) / std::max(1.0, std::abs(q)));
        if (x > 0.0) {
          const double fd = (p_alpha_k(alpha, k, x + h, policy) - p_alpha_k(alpha, k, x - h, policy)) / (2 * h);
          const double d = p_alpha_k_prime(alpha, k, x, policy);
          fd_err = std::max(fd_err, std::abs(fd - d) / std::max(1.0, std::abs(d)));
        }
      }
    }
  }
  suite.at_most("p_series_vs_quadrature", route_err, 0.0, 1e-11);
  suite.at_most("p_prime_vs_fd", fd_err, 0.0, 1e-6, "central difference, h = 1e-5");
}

void pde_checks(Suite& suite, const EvalPolicy& policy) {
  double worst = 0.0;
  for (double a : suite.alphas({-0.5, 0.5, 2.0})) {
    const AlphaParameter alpha(a);
    for (int i = 0; i < 10; ++i) {
      const auto s = random_spectrum(suite.rng(), alpha, 8);
      for (int j = 0; j < 20; ++j) {
        const DiskPoint z(random_disk_point(suite.rng(), 0.8));
        worst = std::max(worst, pde_residual(s, z, 1e-4, policy));
      }
    }
  }
  suite.at_most("pde_residual", worst, 0.0, 1e-5, "h = 1e-4");
}

void monotonicity_checks(Suite& suite, const EvalPolicy& policy) {
  std::vector<double> xs;
  for (int i = 0; i < 10; ++i) xs.push_back(0.1 * i);
  xs.push_back(0.99);

  auto violations = [&](const std::vector<double>& alphas, bool decreasing) {
    int bad = 0;
    for (double a : alphas) {
      const AlphaParameter alpha(a);
      const double limit = 1.0 / (1.0 + a);
      double prev = NAN;
      for (double x : xs) {
        const double p = p_alpha_k(alpha, 1, x, policy);
        const bool in_band = decreasing ? (p <= 1.0 && p > limit) : (p >= 1.0 && p < limit);
        const bool monotone = std::isnan(prev) || (decreasing ? p < prev : p > prev);
        if (!in_band || !monotone) ++bad;
        prev = p;
      }
    }
    return static_cast<double>(bad);
  };
  suite.at_most("p1_decreasing_positive_alpha", violations({0.5, 1.0, 3.0}, true), 0.0, 0.0);
  suite.at_most("p1_increasing_negative_alpha", violations({-0.9, -0.5, -0.1}, false), 0.0, 0.0);

  int not_decreasing = 0;
  double prev = HUGE_VAL;
  for (int i = 0; i <= 10; ++i) {
    const double g = g_ratio(AlphaParameter(-0.99 + 0.099 * i));
    if (!(g < prev)) ++not_decreasing;
    prev = g;
  }
  suite.at_most("g_ratio_decreasing", not_decreasing, 0.0, 0.0, "11 points in (-0.99, 0]");

  const double g_half = g_ratio(AlphaParameter(-0.5));
  suite.report().add("g_ratio_direction", g_half, 1.0, 0.0, Relation::at_most, false,
                     "g exceeds 1 on (-1, 0) since g decreases to g(0) = 1; the claim g < 1 there is false");
}

void kernel_mass_checks(Suite& suite, const EvalPolicy& policy) {
  double excess = -HUGE_VAL;
  for (double a : {-0.9, -0.5, -0.1}) {
    const AlphaParameter alpha(a);
    for (double r : {0.0, 0.5, 0.9, 0.99, 0.999}) {
      excess = std::max(excess, kernel_mass(alpha, DiskPoint(Complex(r, 0.0)), policy) - g_ratio(alpha));
    }
  }
  suite.at_most("kernel_mass_bound", excess, 0.0, 1e-6, "max mass - g(alpha) for |z| <= 0.999");

  const auto grid = solve_grid(AlphaParameter(-0.5), extremal_triple_step(), 64, policy);
  double max_u = 0.0;
  for (const auto& s : grid) max_u = std::max(max_u, std::abs(s.u));
  suite.at_most("grid_modulus_bound", max_u, g_ratio(AlphaParameter(-0.5)), 1e-6,
                "alpha = -0.5, extremal boundary, grid 64");
}

void schwarz_checks(Suite& suite) {
  auto& rng = suite.rng();
  int wrong = 0;
  for (int i = 0; i < 1000; ++i) {
    const AlphaParameter alpha(rng.uniform(-0.9, 3.0));
    const RigidityMode mode = (i % 2 == 0) ? RigidityMode::jacobian : RigidityMode::lambda;
    const int K = rng.integer(1, 8);
    CoefficientSpectrum s(alpha, K);
    RigidityVerdict expected{};
    switch (i % 4) {
      case 0: {  // rotation, with rounding-level perturbations
        const double radius = 1.0 + rng.uniform(-1e-12, 1e-12);
        s.set(1, std::polar(radius, rng.uniform(0.0, 2 * pi)));
        for (int k = -K; k <= K; ++k) {
          if (k != 1 && rng.uniform() < 0.3) s.set(k, std::polar(rng.uniform(0.0, 1e-12), rng.uniform(0.0, 2 * pi)));
        }
        expected = RigidityVerdict::rotation_forced;
        break;
      }
      case 1: {  // J_u(0) > 1: the Parseval constraint cannot hold
        const double cm1 = rng.uniform(0.0, 0.5);
        const double c1 = std::sqrt(1.0 + cm1 * cm1 + rng.uniform(1e-9, 0.5));
        s.set(1, std::polar(c1, rng.uniform(0.0, 2 * pi)));
        s.set(-1, std::polar(cm1, rng.uniform(0.0, 2 * pi)));
        for (int k = 2; k <= K; ++k) s.set(k, {rng.uniform(-0.1, 0.1), rng.uniform(-0.1, 0.1)});
        expected = RigidityVerdict::constraint_violated;
        break;
      }
      case 2: {  // hypothesis met with extra mass
        const double t = rng.uniform(0.01, 0.5);
        if (mode == RigidityMode::jacobian) {
          s.set(1, std::sqrt(1.0 + t * t));
          s.set(-1, t);
        } else {
          s.set(1, 1.0 + t);
          s.set(-1, Complex(0.0, t));
        }
        if (K >= 2) s.set(2, {rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2)});
        expected = RigidityVerdict::constraint_violated;
        break;
      }
      default: {  // strictly inside: nothing can be concluded
        const double c1 = rng.uniform(0.0, 0.9);
        s.set(1, std::polar(c1, rng.uniform(0.0, 2 * pi)));
        const double room = 0.5 * (1.0 - c1 * c1);
        for (int k = -K; k <= K; ++k) {
          if (k == 1) continue;
          // Negative modes enter the Parseval sum weighted by B(|k|, alpha+1)^2.
          const double weight = k < 0 ? std::max(1.0, beta_fn(-k, alpha + 1.0)) : 1.0;
          s.set(k, std::polar(std::sqrt(room / (2 * K + 1)) * rng.uniform() / weight,
                              rng.uniform(0.0, 2 * pi)));
        }
        expected = RigidityVerdict::inconclusive;
        break;
      }
    }
    if (schwarz_rigidity(s, mode).verdict != expected) ++wrong;
  }
  suite.at_most("schwarz_fuzz", wrong, 0.0, 0.0, "misclassifications over 1000 spectra");
}

// c_k = c_{-k} B_k + d sum_j w_j U_{k-1}(cos t_j): a convex combination of the
// extreme sine ratios, hence |ratio| <= k by construction.
CoefficientSpectrum typically_real_member(SeededRandom& rng, AlphaParameter alpha, int K) {
  const double a = alpha.value();
  const double limit = a >= 0.0 ? 1.0 : 1.0 + a;
  const double cm1 = rng.uniform(-0.9, 0.9) * limit;
  const double d = 1.0 - cm1 * beta_fn(1, a + 1.0);
  const int n_atoms = rng.integer(1, 4);
  std::vector<double> t(n_atoms), w(n_atoms);
  double total = 0.0;
  for (int j = 0; j < n_atoms; ++j) {
    t[j] = rng.uniform(0.0, pi);
    w[j] = rng.uniform(0.05, 1.0);
    total += w[j];
  }
  CoefficientSpectrum s(alpha, K);
  s.set(-1, cm1);
  s.set(1, 1.0);
  for (int k = 2; k <= K; ++k) {
    const double cmk = rng.uniform(-0.3, 0.3);
    double mix = 0.0;
    for (int j = 0; j < n_atoms; ++j) mix += w[j] / total * sine_ratio(k, t[j]);
    s.set(-k, cmk);
    s.set(k, cmk * beta_fn(k, a + 1.0) + d * mix);
  }
  return s;
}

void typically_real_checks(Suite& suite, const EvalPolicy& policy) {
  double koebe_err = 0.0;
  for (double a : {1.0, -0.5}) {
    CoefficientSpectrum s(AlphaParameter(a), 30);
    for (int k = 1; k <= 30; ++k) s.set(k, static_cast<double>(k));
    const auto r = typically_real_bound_check(s);
    if (!r.gate_passed || r.rows.size() != 29) koebe_err = HUGE_VAL;
    for (const auto& row : r.rows) koebe_err = std::max(koebe_err, std::abs(row.ratio / row.k - 1.0));
  }
  suite.at_most("typically_real_koebe", koebe_err, 0.0, 1e-12);

  double excess = -HUGE_VAL;
  int missed = 0;
  for (int i = 0; i < 200; ++i) {
    const AlphaParameter alpha(i % 2 == 0 ? 1.0 : -0.5);
    auto s = typically_real_member(suite.rng(), alpha, 30);
    const auto r = typically_real_bound_check(s);
    if (!r.gate_passed) {
      excess = HUGE_VAL;
      continue;
    }
    for (const auto& row : r.rows) excess = std::max(excess, row.ratio - row.k);

    // Push one coefficient 1% past the bound.
    const int k = suite.rng().integer(2, 30);
    const double a = alpha.value();
    const double d = 1.0 - s[-1].real() * beta_fn(1, a + 1.0);
    s.set(k, s[-k].real() * beta_fn(k, a + 1.0) + d * 1.01 * k);
    if (typically_real_bound_check(s).all_passed()) ++missed;
  }
  suite.at_most("typically_real_random", excess, 0.0, 1e-10, "max ratio - k");
  suite.at_most("typically_real_nonmember_detect", missed, 0.0, 0.0);

  double dq_err = 0.0;
  for (int i = 0; i < 20; ++i) {
    const AlphaParameter alpha(i % 2 == 0 ? 1.0 : -0.5);
    const auto s = typically_real_member(suite.rng(), alpha, 10);
    const double r = suite.rng().uniform(0.1, 0.9);
    const double theta = suite.rng().uniform(0.05, pi - 0.05);
    const Complex z = std::polar(r, theta);
    const Complex quotient = (eval_series(s, DiskPoint(z), policy).u -
                              eval_series(s, DiskPoint(std::conj(z)), policy).u) / (z - std::conj(z));
    dq_err = std::max(dq_err, std::abs(quotient - difference_quotient(s, r, theta, policy)) /
                              std::max(1.0, std::abs(quotient)));
  }
  suite.at_most("difference_quotient", dq_err, 0.0, 1e-10);
}

void reduction_checks(Suite& suite, const EvalPolicy& policy) {
  double err = 0.0;
  const AlphaParameter zero(0.0);
  for (int i = 0; i < 20; ++i) {
    const auto s = random_spectrum(suite.rng(), zero, 8);
    const Complex z = random_disk_point(suite.rng(), 0.95);
    Complex classical = 0.0;
    for (int k = 0; k <= s.truncation(); ++k) classical += s[k] * ipow(z, k);
    for (int k = 1; k <= s.truncation(); ++k) classical += s[-k] / double(k) * ipow(std::conj(z), k);
    err = std::max(err, std::abs(eval_series(s, DiskPoint(z), policy).u - classical));
  }
  suite.at_most("alpha0_reduction", err, 0.0, 1e-13);

  SolverOptions options;
  options.r_max = suite.config().render_r_max;
  const auto rendered = render(zero, extremal_triple_step(), suite.config().render_grid_n, policy, options);
  std::vector<Complex> image;
  image.reserve(rendered.samples.size());
  for (const auto& s : rendered.samples) image.push_back(s.u);
  const auto hull = convex_hull(image);
  double worst = 0.0;
  for (int j = 0; j < 3; ++j) {
    const Complex root = std::polar(1.0, 2.0 * pi * j / 3.0);
    double nearest = HUGE_VAL;
    for (const auto& v : hull) nearest = std::min(nearest, std::abs(v - root));
    worst = std::max(worst, nearest);
  }
  suite.at_most("render_hull_vertices", worst, 0.0, 0.02, "distance from each cube root of unity to the hull");
}

}  // namespace

VerificationReport run_verification(const VerifyConfig& config) {
  if (config.alpha) static_cast<void>(AlphaParameter(*config.alpha));
  Suite suite(config);
  const EvalPolicy policy;
  heinz_checks(suite);
  auxiliary_checks(suite, policy);
  solver_checks(suite, policy);
  specfun_checks(suite, policy);
  pde_checks(suite, policy);
  monotonicity_checks(suite, policy);
  kernel_mass_checks(suite, policy);
  schwarz_checks(suite);
  typically_real_checks(suite, policy);
  reduction_checks(suite, policy);
  return suite.report();
}

}  // namespace alphakit
