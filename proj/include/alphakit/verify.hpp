#pragma once

#include <cstdint>
#include <optional>

#include "alphakit/report.hpp"

namespace alphakit {

struct VerifyConfig {
  /// Restricts the alpha-dependent checks to this value; otherwise each
  /// check uses its own alpha grid.
  std::optional<double> alpha;
  /// Widens every check band to at least tol. Numerics stay at 1e-12.
  double tol = 0.0;
  std::uint64_t seed = 20240101;
  int render_grid_n = 256;
  double render_r_max = 0.99;
};

/// Runs the named check suite. Throws DomainError for an invalid alpha.
VerificationReport run_verification(const VerifyConfig& config);

}  // namespace alphakit
