#pragma once

// Quadrature helpers shared by the special functions, the kernel and the
// Dirichlet solver.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

#include "alphakit/specfun.hpp"

namespace alphakit {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule. Rules are built once per order and shared;
/// the returned reference stays valid for the program lifetime.
const GaussLegendreRule& gauss_legendre(int n);

namespace detail {

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(std::complex<double> v) { return std::abs(v); }
template <std::size_t N>
double magnitude(const std::array<std::complex<double>, N>& v) {
  double m = 0.0;
  for (const auto& c : v) m = std::max(m, std::abs(c));
  return m;
}

template <class T>
T zero_like() {
  if constexpr (std::is_arithmetic_v<T>) {
    return T{0};
  } else {
    return T{};
  }
}

inline void accumulate(double& acc, double w, double v) { acc += w * v; }
inline void accumulate(std::complex<double>& acc, double w, std::complex<double> v) {
  acc += w * v;
}
template <std::size_t N>
void accumulate(std::array<std::complex<double>, N>& acc, double w,
                const std::array<std::complex<double>, N>& v) {
  for (std::size_t i = 0; i < N; ++i) acc[i] += w * v[i];
}

template <class T>
T add(const T& a, const T& b) {
  if constexpr (std::is_arithmetic_v<T> || std::is_same_v<T, std::complex<double>>) {
    return a + b;
  } else {
    T out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
  }
}

template <class T>
double max_deviation(const T& a, const T& b) {
  if constexpr (std::is_arithmetic_v<T> || std::is_same_v<T, std::complex<double>>) {
    return std::abs(a - b);
  } else {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
  }
}

}  // namespace detail

/// Fixed-rule Gauss-Legendre integral of f over [a, b].
template <class F>
auto gauss_panel(F&& f, double a, double b, const GaussLegendreRule& rule) {
  using T = std::decay_t<decltype(f(a))>;
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  T acc = detail::zero_like<T>();
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    detail::accumulate(acc, rule.weights[i], f(mid + half * rule.nodes[i]));
  }
  if constexpr (std::is_arithmetic_v<T> || std::is_same_v<T, std::complex<double>>) {
    return T(acc * half);
  } else {
    for (auto& c : acc) c *= half;
    return acc;
  }
}

/// Adaptive bisection around a fixed Gauss-Legendre rule. A panel is
/// accepted when the two halves agree with the whole to within
/// max(abs_tol, rel_tol * |panel value|). The absolute budget is halved
/// at each level so the accepted errors sum to at most abs_tol.
template <class F>
auto adaptive_gauss(F&& f, double a, double b, double abs_tol, double rel_tol,
                    const GaussLegendreRule& rule, int max_depth = 48) {
  using T = std::decay_t<decltype(f(a))>;
  struct Recurse {
    F& f;
    const GaussLegendreRule& rule;
    double rel_tol;
    int max_depth;
    T operator()(double lo, double hi, const T& whole, double tol, int depth) const {
      const double mid = 0.5 * (lo + hi);
      const T left = gauss_panel(f, lo, mid, rule);
      const T right = gauss_panel(f, mid, hi, rule);
      const T both = detail::add(left, right);
      const double err = detail::max_deviation(both, whole);
      if (err <= std::max(tol, rel_tol * detail::magnitude(both)) || hi - lo < 1e-15 * (1.0 + std::abs(lo))) {
        return both;
      }
      if (depth >= max_depth) {
        throw ConvergenceError("adaptive quadrature exceeded its subdivision depth");
      }
      return detail::add((*this)(lo, mid, left, 0.5 * tol, depth + 1),
                         (*this)(mid, hi, right, 0.5 * tol, depth + 1));
    }
  };
  Recurse rec{f, rule, rel_tol, max_depth};
  return rec(a, b, gauss_panel(f, a, b, rule), abs_tol, 0);
}

/// Periodic trapezoid rule on [0, 2pi) with doubling until two successive
/// levels agree to rel_tol * max(scale, |I|). Returns the mean value
/// (1/2pi) * integral.
template <class F>
auto periodic_mean(F&& f, double rel_tol, double scale = 1.0, int n_start = 64,
                   int n_max = 1 << 22) {
  using T = std::decay_t<decltype(f(0.0))>;
  const double two_pi = 2.0 * std::numbers::pi;
  int n = n_start;
  T sum = detail::zero_like<T>();
  for (int i = 0; i < n; ++i) detail::accumulate(sum, 1.0, f(two_pi * i / n));
  auto mean_of = [](T s, int count) {
    if constexpr (std::is_arithmetic_v<T> || std::is_same_v<T, std::complex<double>>) {
      return T(s / static_cast<double>(count));
    } else {
      for (auto& c : s) c /= static_cast<double>(count);
      return s;
    }
  };
  T prev = mean_of(sum, n);
  while (n < n_max) {
    // Reuse the previous level: only the odd nodes of the refined grid are new.
    for (int i = 0; i < n; ++i) detail::accumulate(sum, 1.0, f(two_pi * (i + 0.5) / n));
    n *= 2;
    const T cur = mean_of(sum, n);
    if (detail::max_deviation(cur, prev) <= rel_tol * std::max(scale, detail::magnitude(cur))) {
      return cur;
    }
    prev = cur;
  }
  throw ConvergenceError("periodic trapezoid rule did not converge");
}

}  // namespace alphakit
