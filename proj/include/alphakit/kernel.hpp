#pragma once

// The Poisson-type kernel of the weighted Laplacian and the standard weight.

#include <complex>
#include <utility>

#include "alphakit/specfun.hpp"

namespace alphakit {

using Complex = std::complex<double>;

/// z^n for n >= 0 by binary powering (exact at z = 0, unlike std::pow).
inline Complex ipow(Complex z, int n) {
  Complex result(1.0, 0.0);
  while (n > 0) {
    if (n & 1) result *= z;
    z *= z;
    n >>= 1;
  }
  return result;
}

/// A point of the open unit disk.
class DiskPoint {
 public:
  explicit DiskPoint(Complex z);
  DiskPoint(double re, double im) : DiskPoint(Complex(re, im)) {}

  Complex z() const noexcept { return z_; }
  double norm_sq() const noexcept { return std::norm(z_); }
  double abs() const noexcept { return std::abs(z_); }

 private:
  Complex z_;
};

/// (1 - |z|^2)^alpha.
double weight(AlphaParameter alpha, DiskPoint z);

/// (1-|z|^2)^{alpha+1} / ((1-z)(1-conj z)^{alpha+1}), principal branch.
Complex poisson_kernel(AlphaParameter alpha, DiskPoint z);

/// Logarithmic Wirtinger derivatives of the kernel at w:
/// first = d/dw log P(w), second = d/dconj(w) log P(w).
std::pair<Complex, Complex> poisson_kernel_log_gradient(AlphaParameter alpha, DiskPoint w);

inline constexpr double kKernelMassMaxRadius = 0.999;

/// (1/2pi) int_0^{2pi} |P_alpha(z e^{-i phi})| dphi. Refuses |z| > 0.999.
double kernel_mass(AlphaParameter alpha, DiskPoint z, const EvalPolicy& policy = {});

/// k-th Fourier mode of phi -> P_alpha(z e^{-i phi}) against e^{-ik phi}:
/// z^k for k >= 0, P_{alpha,|k|}(|z|^2) conj(z)^{|k|} / B(|k|, alpha+1) for k < 0.
Complex kernel_expansion_term(AlphaParameter alpha, int k, DiskPoint z,
                              const EvalPolicy& policy = {});

}  // namespace alphakit
