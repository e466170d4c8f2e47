#pragma once

// Unit-modulus boundary data e^{i theta(phi)} and the extraction of the
// two-sided series coefficients from it.

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "alphakit/kernel.hpp"
#include "alphakit/spectrum.hpp"

namespace alphakit {

/// One arc of a piecewise-constant phase: theta holds on
/// [phi_start, next phi_start).
struct StepArc {
  double phi_start;
  double theta;
};

struct StepPhase {
  std::vector<StepArc> arcs;
};

/// Finite Fourier sum  sum_m coeffs[m] e^{i m phi}.
struct TrigPoly {
  std::map<int, Complex> coeffs;
};

/// Values on the uniform grid phi_n = 2 pi n / N, linearly interpolated
/// between nodes when evaluated.
struct Sampled {
  std::vector<Complex> values;
};

class BoundaryFunction {
 public:
  using Representation = std::variant<StepPhase, TrigPoly, Sampled>;

  /// Arcs must start at 0 and have strictly increasing starts below 2 pi.
  static BoundaryFunction step(std::vector<StepArc> arcs);
  static BoundaryFunction trig_poly(std::map<int, Complex> coeffs);
  static BoundaryFunction sampled(std::vector<Complex> values);

  const Representation& representation() const noexcept { return rep_; }
  const StepPhase* as_step() const noexcept { return std::get_if<StepPhase>(&rep_); }
  const TrigPoly* as_trig_poly() const noexcept { return std::get_if<TrigPoly>(&rep_); }
  const Sampled* as_sampled() const noexcept { return std::get_if<Sampled>(&rep_); }

  /// Boundary value at phi (any real; reduced modulo 2 pi).
  Complex value(double phi) const;

  /// Points in [0, 2pi) where the representation is not smooth (arc starts
  /// or sample nodes). Empty for trigonometric polynomials.
  std::vector<double> breakpoints() const;

  /// Nondecreasing phase with total rise 2 pi over one period. An explicit
  /// flag, when set, overrides the computed answer.
  bool is_admissible() const;
  std::optional<bool> admissible_flag() const noexcept { return admissible_flag_; }
  BoundaryFunction& set_admissible_flag(std::optional<bool> flag) {
    admissible_flag_ = flag;
    return *this;
  }

  /// |b| = 1 within tol (checked on samples for trig polynomials).
  bool is_unit_modulus(double tol = 1e-12) const;

 private:
  explicit BoundaryFunction(Representation rep) : rep_(std::move(rep)) {}

  Representation rep_;
  std::optional<bool> admissible_flag_;
};

/// Raw Fourier coefficient (1/2pi) int_0^{2pi} e^{-ik phi} b(phi) dphi for
/// any integer k. Step phases are integrated arc by arc in closed form,
/// trig polynomials read off exactly, samples via the discrete transform.
Complex fourier_coefficient(const BoundaryFunction& b, int k);

/// c_k for k >= 0.
Complex fourier_coefficient_pos(const BoundaryFunction& b, int k);
/// c_{-k} for k >= 1: the raw coefficient at -k divided by B(k, alpha+1).
Complex fourier_coefficient_neg(AlphaParameter alpha, const BoundaryFunction& b, int k);

CoefficientSpectrum spectrum_from_boundary(AlphaParameter alpha, const BoundaryFunction& b,
                                           int truncation);

/// Phase 0, 2pi/3, 4pi/3, 0 on [0,pi/3), [pi/3,pi), [pi,5pi/3), [5pi/3,2pi).
BoundaryFunction extremal_triple_step();

/// Random admissible step phase, deterministic in seed. Needs n_arcs >= 2.
BoundaryFunction random_admissible_step(int n_arcs, std::uint64_t seed);

/// Samples b on the uniform n-point grid.
BoundaryFunction to_sampled(const BoundaryFunction& b, int n = 4096);

}  // namespace alphakit
