#pragma once

// Evaluation of alpha-harmonic mappings: from a coefficient spectrum via the
// series expansion, and from boundary data via the Poisson-type integral.

#include <optional>
#include <vector>

#include "alphakit/boundary.hpp"
#include "alphakit/kernel.hpp"
#include "alphakit/spectrum.hpp"

namespace alphakit {

struct MapEvaluation {
  Complex u;
  Complex u_z;
  Complex u_zbar;
  double jacobian = 0.0;      // |u_z|^2 - |u_zbar|^2
  double lambda_big = 0.0;    // |u_z| + |u_zbar|
  double lambda_small = 0.0;  // ||u_z| - |u_zbar||
  std::optional<Complex> dilatation;  // conj(u_zbar) / u_z, when u_z != 0

  static MapEvaluation from_derivatives(Complex u, Complex u_z, Complex u_zbar);
};

MapEvaluation eval_series(const CoefficientSpectrum& s, DiskPoint z, const EvalPolicy& policy = {});

inline constexpr double kDefaultSolverRadius = 0.95;

struct SolverOptions {
  /// Largest |z| the quadrature solver accepts.
  double r_max = kDefaultSolverRadius;
};

/// (1/2pi) int P_alpha(z e^{-i phi}) b(phi) dphi.
///
/// Smooth boundaries use the periodic trapezoid rule with doubling; step and
/// sampled boundaries are integrated panel by panel between their
/// breakpoints with adaptive Gauss-Legendre. Throws DomainError for
/// |z| > r_max.
Complex solve_dirichlet(AlphaParameter alpha, const BoundaryFunction& b, DiskPoint z,
                        const EvalPolicy& policy = {}, const SolverOptions& options = {});

/// Same integral with the kernel's Wirtinger derivatives, giving u, u_z and
/// u_zbar from one quadrature.
MapEvaluation solve_dirichlet_eval(AlphaParameter alpha, const BoundaryFunction& b, DiskPoint z,
                                   const EvalPolicy& policy = {},
                                   const SolverOptions& options = {});

struct GridSample {
  Complex z;
  Complex u;
};

/// Cell-centred grid_n x grid_n grid over [-1,1]^2, rows from top (y = +1)
/// to bottom, points with |z| > r_max skipped. Parallel over points with the
/// thread count capped by ALPHAKIT_THREADS; output does not depend on it.
std::vector<GridSample> solve_grid(AlphaParameter alpha, const BoundaryFunction& b, int grid_n,
                                   const EvalPolicy& policy = {},
                                   const SolverOptions& options = {});

/// Centre of grid cell (row, col) for the layout used by solve_grid.
Complex grid_point(int grid_n, int row, int col);

/// |d/dz [ (1-|z|^2)^{-alpha} u_zbar ]| at z, with u_zbar taken analytically
/// from the series and d/dz by central differences of step h.
double pde_residual(const CoefficientSpectrum& s, DiskPoint z, double h,
                    const EvalPolicy& policy = {});

enum class SenseOrientation {
  preserving,       // |u_z| > |u_zbar|
  not_preserving,
  critical_point,   // u_z = u_zbar = 0: undecided at an isolated zero
};

SenseOrientation sense_preserving_at(const CoefficientSpectrum& s, DiskPoint z,
                                     const EvalPolicy& policy = {});

/// Worker count used for grid evaluation (ALPHAKIT_THREADS, else hardware).
int worker_count();

}  // namespace alphakit
