#pragma once

// Sharp inequalities for alpha-harmonic self-maps of the disk: the Heinz
// functional, the auxiliary functionals J, M, N behind its proof, Schwarz
// rigidity, and the coefficient bound for real-coefficient mappings.

#include <string>
#include <utility>
#include <vector>

#include "alphakit/boundary.hpp"
#include "alphakit/spectrum.hpp"

namespace alphakit {

/// 27 / (4 pi^2).
double heinz_bound();

struct HeinzReport {
  Complex c1;
  Complex c0;
  Complex c_neg1;
  double functional_value = 0.0;
  double bound = 0.0;
  double gap = 0.0;  // functional_value - bound
  bool passed = false;
};

/// |c1|^2 + (3 sqrt3 / pi)|c0|^2 + |c_{-1}|^2 / (alpha+1)^2 against
/// 27/(4 pi^2); passes when the gap is >= -tol.
HeinzReport heinz_functional(AlphaParameter alpha, Complex c1, Complex c0, Complex c_neg1,
                             double tol = 1e-12);

/// Coefficients from the boundary, then heinz_functional. Throws
/// std::invalid_argument for non-admissible or non-unit-modulus data.
HeinzReport heinz_from_boundary(AlphaParameter alpha, const BoundaryFunction& b,
                                double tol = 1e-12);

/// J(v) = (1/2pi) int sin^2((theta(p+v) - theta(p-v))/2) dp, written as
/// (1/2pi) int (1 - Re b(p+v) conj b(p-v)) / 2 dp. Exact on step phases.
double j_functional(const BoundaryFunction& b, double varphi, const EvalPolicy& policy = {});

/// Even, pi/3-periodic, equal to cos^2(pi/3 + v) on [0, pi/6].
double n_function(double varphi);
/// cos^2 v - N(v) on [0, pi/2]; DomainError elsewhere.
double m_function(double varphi);

/// Cosine series of N truncated after `terms` harmonics.
double n_fourier_series(double varphi, int terms);

/// max over a uniform grid on [0, pi/2] (endpoints and the kinks at
/// multiples of pi/6 included) of |N - truncated series|.
double n_fourier_check(const EvalPolicy& policy = {}, int terms = 200, int grid_intervals = 3600);

/// int_0^{pi/2} M.
double m_integral(const EvalPolicy& policy = {});
/// |int_0^{pi/2} M - 3 sqrt3 / 8|.
double m_integral_check(const EvalPolicy& policy = {});

/// (16/pi) int_0^{pi/2} M(v) J(v) dv.
double mj_integral(const BoundaryFunction& b, const EvalPolicy& policy = {});
/// mj_integral - (3 sqrt3/pi - 27/(4 pi^2)); nonpositive for admissible data.
double mj_inequality_check(const BoundaryFunction& b, const EvalPolicy& policy = {});

/// |1 - 2J(v) - (|c0|^2 + sum_{k<=K} (|c_k|^2 + |c_{-k}|^2 B(k,alpha+1)^2) cos 2kv)|.
double spectral_identity_check(AlphaParameter alpha, const BoundaryFunction& b, double varphi,
                               int truncation, const EvalPolicy& policy = {});

/// 1 - sum_{|k|<=K} |raw Fourier coefficient|^2 for unit-modulus data.
double parseval_deficit(const BoundaryFunction& b, int truncation);

enum class RigidityMode { jacobian, lambda };
enum class RigidityVerdict { rotation_forced, constraint_violated, inconclusive };

std::string to_string(RigidityVerdict v);

struct RigidityReport {
  double parseval_sum = 0.0;  // sum_{k>=1} |c_k|^2 + |c_{-k}|^2 B(k, alpha+1)^2
  double j0 = 0.0;            // J_u(0) = |c1|^2 - |c_{-1}|^2
  double lambda0 = 0.0;       // ||c1| - |c_{-1}||
  RigidityVerdict verdict = RigidityVerdict::inconclusive;
};

/// The spectrum is taken to describe a self-map with u(0) = 0 (c_0 is
/// checked as one of the forced-zero coefficients, |u| < 1 is not).
RigidityReport schwarz_rigidity(const CoefficientSpectrum& s, RigidityMode mode, double tol = 1e-10);

struct TypicallyRealRow {
  int k = 0;
  double ratio = 0.0;
  double bound = 0.0;
  bool passed = false;
};

struct TypicallyRealReport {
  bool gate_passed = false;
  std::string gate_reason;  // empty when the gate passed
  std::vector<TypicallyRealRow> rows;

  bool all_passed() const;
};

/// |(c_k - c_{-k} B(k,a+1)) / (1 - c_{-1} B(1,a+1))| <= k for k = 2..K.
/// Needs real coefficients, c1 = 1, and |c_{-1}| < 1 (alpha >= 0) or
/// |c_{-1}| < 1 + alpha (alpha < 0); otherwise the gate fails and no rows
/// are produced. Membership in the univalent class is assumed, not checked.
TypicallyRealReport typically_real_bound_check(const CoefficientSpectrum& s);

/// sum_k (c_k - c_{-k} P_{alpha,k}(r^2)) r^{k-1} sin(k theta)/sin(theta), with
/// the quotient from the Chebyshev recurrence U_{k-1}(cos theta).
double difference_quotient(const CoefficientSpectrum& s, double r, double theta,
                           const EvalPolicy& policy = {});

/// sin(k theta)/sin(theta) = U_{k-1}(cos theta), stable at theta = 0, pi.
double sine_ratio(int k, double theta);

/// (min, max) of sin(k theta)/sin(theta) over [0, pi], endpoint limits included.
std::pair<double, double> dirichlet_ratio_extrema(int k);

}  // namespace alphakit
