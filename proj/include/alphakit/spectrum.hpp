#pragma once

#include <complex>
#include <initializer_list>
#include <utility>
#include <vector>

#include "alphakit/specfun.hpp"

namespace alphakit {

/// Two-sided coefficient family {c_k}, |k| <= K, defining
///   u(z) = sum_{k>=0} c_k z^k + sum_{k>=1} c_{-k} P_{alpha,k}(|z|^2) conj(z)^k.
/// Coefficients outside the truncation read as zero.
class CoefficientSpectrum {
 public:
  CoefficientSpectrum(AlphaParameter alpha, int truncation);
  /// Truncation is the largest |k| present in the list.
  CoefficientSpectrum(AlphaParameter alpha,
                      std::initializer_list<std::pair<int, std::complex<double>>> coeffs);

  AlphaParameter alpha() const noexcept { return alpha_; }
  int truncation() const noexcept { return truncation_; }

  std::complex<double> operator[](int k) const noexcept {
    if (k < -truncation_ || k > truncation_) return {};
    return coeffs_[static_cast<std::size_t>(k + truncation_)];
  }
  /// Throws std::out_of_range for |k| > truncation and std::invalid_argument
  /// for non-finite values.
  void set(int k, std::complex<double> value);

  bool all_real(double tol = 0.0) const;

  friend bool operator==(const CoefficientSpectrum& a, const CoefficientSpectrum& b) {
    return a.alpha_.value() == b.alpha_.value() && a.truncation_ == b.truncation_ &&
           a.coeffs_ == b.coeffs_;
  }

 private:
  AlphaParameter alpha_;
  int truncation_;
  std::vector<std::complex<double>> coeffs_;
};

}  // namespace alphakit
