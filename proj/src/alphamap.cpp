#include "alphakit/alphamap.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <string>
#include <thread>

#include "alphakit/quadrature.hpp"

namespace alphakit {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kSolverRuleOrder = 20;

using Triple = std::array<Complex, 3>;

// Coarse magnitude of the boundary data, used as the absolute scale of the
// solver tolerance.
double boundary_scale(const BoundaryFunction& b) {
  if (b.as_step()) return 1.0;
  double m = 0.0;
  if (const auto* p = b.as_trig_poly()) {
    for (const auto& [k, c] : p->coeffs) m += std::abs(c);
  } else {
    for (const auto& v : b.as_sampled()->values) m = std::max(m, std::abs(v));
  }
  return std::max(m, 1e-300);
}

// Mean over [0, 2pi) of f, choosing the rule by the boundary representation.
template <class F>
auto boundary_mean(const BoundaryFunction& b, F&& f, const EvalPolicy& policy) {
  const double scale = boundary_scale(b);
  const auto breaks = b.breakpoints();
  if (breaks.empty()) return periodic_mean(f, policy.rel_tol, scale);

  using T = std::decay_t<decltype(f(0.0))>;
  const auto& rule = gauss_legendre(kSolverRuleOrder);
  T total = detail::zero_like<T>();
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    const double lo = breaks[i];
    const double hi = i + 1 < breaks.size() ? breaks[i + 1] : kTwoPi;
    total = detail::add(total, adaptive_gauss(f, lo, hi, policy.rel_tol * scale * (hi - lo),
                                              policy.rel_tol, rule));
  }
  if constexpr (std::is_same_v<T, Complex>) {
    return T(total / kTwoPi);
  } else {
    for (auto& c : total) c /= kTwoPi;
    return total;
  }
}

void check_radius(DiskPoint z, const SolverOptions& options) {
  if (z.abs() > options.r_max) {
    throw DomainError("solver refuses |z| = " + std::to_string(z.abs()) +
                      " > r_max = " + std::to_string(options.r_max));
  }
}

}  // namespace

MapEvaluation MapEvaluation::from_derivatives(Complex u, Complex u_z, Complex u_zbar) {
  MapEvaluation e;
  e.u = u;
  e.u_z = u_z;
  e.u_zbar = u_zbar;
  const double a = std::abs(u_z);
  const double b = std::abs(u_zbar);
  e.jacobian = std::norm(u_z) - std::norm(u_zbar);
  e.lambda_big = a + b;
  e.lambda_small = std::abs(a - b);
  if (u_z != Complex{}) e.dilatation = std::conj(u_zbar) / u_z;
  return e;
}

MapEvaluation eval_series(const CoefficientSpectrum& s, DiskPoint z, const EvalPolicy& policy) {
  const Complex zv = z.z();
  const Complex zb = std::conj(zv);
  const double x = z.norm_sq();
  const int K = s.truncation();

  Complex u{};
  Complex u_z{};
  Complex u_zbar{};
  // Analytic part, Horner-style accumulation of powers.
  Complex zk(1.0, 0.0);  // z^k
  Complex zk1(0.0, 0.0); // z^{k-1}
  for (int k = 0; k <= K; ++k) {
    const Complex c = s[k];
    if (c != Complex{}) {
      u += c * zk;
      if (k > 0) u_z += static_cast<double>(k) * c * zk1;
    }
    zk1 = zk;
    zk *= zv;
  }
  // Anti-analytic part c_{-k} P(x) conj(z)^k, x = |z|^2:
  //   d/dzbar = c [P'(x) z zb^k + k P(x) zb^{k-1}],  d/dz = c P'(x) zb^{k+1}.
  Complex zbk1(1.0, 0.0);  // zb^{k-1}
  for (int k = 1; k <= K; ++k) {
    const Complex c = s[-k];
    const Complex zbk = zbk1 * zb;
    if (c != Complex{}) {
      const double p = p_alpha_k(s.alpha(), k, x, policy);
      const double dp = p_alpha_k_prime(s.alpha(), k, x, policy);
      u += c * p * zbk;
      u_zbar += c * (dp * zv * zbk + static_cast<double>(k) * p * zbk1);
      u_z += c * dp * zbk * zb;
    }
    zbk1 = zbk;
  }
  return MapEvaluation::from_derivatives(u, u_z, u_zbar);
}

Complex solve_dirichlet(AlphaParameter alpha, const BoundaryFunction& b, DiskPoint z,
                        const EvalPolicy& policy, const SolverOptions& options) {
  policy.validate();
  check_radius(z, options);
  const Complex z0 = z.z();
  auto integrand = [&](double phi) {
    return poisson_kernel(alpha, DiskPoint(z0 * std::polar(1.0, -phi))) * b.value(phi);
  };
  return boundary_mean(b, integrand, policy);
}

MapEvaluation solve_dirichlet_eval(AlphaParameter alpha, const BoundaryFunction& b, DiskPoint z,
                                   const EvalPolicy& policy, const SolverOptions& options) {
  policy.validate();
  check_radius(z, options);
  const Complex z0 = z.z();
  auto integrand = [&](double phi) -> Triple {
    const Complex rot = std::polar(1.0, -phi);
    const DiskPoint w(z0 * rot);
    const Complex pb = poisson_kernel(alpha, w) * b.value(phi);
    const auto [dw, dwbar] = poisson_kernel_log_gradient(alpha, w);
    // w = z e^{-i phi}: d/dz = e^{-i phi} d/dw, d/dzbar = e^{i phi} d/dwbar.
    return {pb, pb * dw * rot, pb * dwbar * std::conj(rot)};
  };
  const Triple m = boundary_mean(b, integrand, policy);
  return MapEvaluation::from_derivatives(m[0], m[1], m[2]);
}

int worker_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("ALPHAKIT_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) n = std::min<long>(n, cap);
  }
  return n;
}

Complex grid_point(int grid_n, int row, int col) {
  const double step = 2.0 / grid_n;
  return {-1.0 + (col + 0.5) * step, 1.0 - (row + 0.5) * step};
}

std::vector<GridSample> solve_grid(AlphaParameter alpha, const BoundaryFunction& b, int grid_n,
                                   const EvalPolicy& policy, const SolverOptions& options) {
  if (grid_n < 2) throw std::invalid_argument("grid_n must be >= 2");
  policy.validate();
  std::vector<GridSample> samples;
  for (int row = 0; row < grid_n; ++row) {
    for (int col = 0; col < grid_n; ++col) {
      const Complex z = grid_point(grid_n, row, col);
      if (std::abs(z) <= options.r_max && std::abs(z) < 1.0) samples.push_back({z, {}});
    }
  }

  const int workers = std::min<int>(worker_count(), static_cast<int>(samples.size()));
  std::vector<std::exception_ptr> errors(samples.size());
  auto work = [&](int id) {
    for (std::size_t i = static_cast<std::size_t>(id); i < samples.size();
         i += static_cast<std::size_t>(workers)) {
      try {
        samples[i].u = solve_dirichlet(alpha, b, DiskPoint(samples[i].z), policy, options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return samples;
}

double pde_residual(const CoefficientSpectrum& s, DiskPoint z, double h, const EvalPolicy& policy) {
  if (!(h > 1e-6 && h < 1e-2)) throw DomainError("pde_residual: h must lie in (1e-6, 1e-2)");
  if (!(z.abs() + 2.0 * h < 1.0)) throw DomainError("pde_residual: stencil leaves the disk");
  const double a = s.alpha();
  auto w = [&](Complex p) {
    const DiskPoint q(p);
    return std::pow(1.0 - q.norm_sq(), -a) * eval_series(s, q, policy).u_zbar;
  };
  const Complex z0 = z.z();
  const Complex i(0.0, 1.0);
  const Complex dx = (w(z0 + h) - w(z0 - h)) / (2.0 * h);
  const Complex dy = (w(z0 + i * h) - w(z0 - i * h)) / (2.0 * h);
  return std::abs(0.5 * (dx - i * dy));
}

SenseOrientation sense_preserving_at(const CoefficientSpectrum& s, DiskPoint z,
                                     const EvalPolicy& policy) {
  const auto e = eval_series(s, z, policy);
  if (std::abs(e.u_z) <= 1e-14 && std::abs(e.u_zbar) <= 1e-14) return SenseOrientation::critical_point;
  return std::abs(e.u_z) > std::abs(e.u_zbar) ? SenseOrientation::preserving
                                              : SenseOrientation::not_preserving;
}

}  // namespace alphakit
