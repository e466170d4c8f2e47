#include "alphakit/kernel.hpp"

#include <cmath>

#include "alphakit/quadrature.hpp"

namespace alphakit {

DiskPoint::DiskPoint(Complex z) : z_(z) {
  if (!(std::norm(z) < 1.0) || !std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("point must lie in the open unit disk");
  }
}

double weight(AlphaParameter alpha, DiskPoint z) { return std::pow(1.0 - z.norm_sq(), alpha.value()); }

Complex poisson_kernel(AlphaParameter alpha, DiskPoint z) {
  const Complex w = z.z();
  const double a1 = alpha + 1.0;
  const double numer = std::pow(1.0 - z.norm_sq(), a1);
  // Re(1 - conj w) > 0 on the disk, so the principal branch is continuous here.
  const Complex denom = (1.0 - w) * std::pow(1.0 - std::conj(w), a1);
  return numer / denom;
}

std::pair<Complex, Complex> poisson_kernel_log_gradient(AlphaParameter alpha, DiskPoint w) {
  const Complex v = w.z();
  const double a1 = alpha + 1.0;
  const double s = 1.0 - w.norm_sq();
  return {-a1 * std::conj(v) / s + 1.0 / (1.0 - v), -a1 * v / s + a1 / (1.0 - std::conj(v))};
}

double kernel_mass(AlphaParameter alpha, DiskPoint z, const EvalPolicy& policy) {
  policy.validate();
  if (z.abs() > kKernelMassMaxRadius) {
    throw ConvergenceError("kernel_mass: |z| > 0.999 is refused");
  }
  const Complex z0 = z.z();
  auto modulus = [&](double phi) {
    return std::abs(poisson_kernel(alpha, DiskPoint(z0 * std::polar(1.0, -phi))));
  };
  return periodic_mean(modulus, policy.rel_tol);
}

Complex kernel_expansion_term(AlphaParameter alpha, int k, DiskPoint z, const EvalPolicy& policy) {
  if (k >= 0) return ipow(z.z(), k);
  const int m = -k;
  const double p = p_alpha_k(alpha, m, z.norm_sq(), policy);
  return p * ipow(std::conj(z.z()), m) / beta_fn(m, alpha + 1.0);
}

}  // namespace alphakit
